#!/usr/bin/env python3
"""Make the package executable with python -m matilda_detour."""

from .cli import main

if __name__ == "__main__":
    main()
