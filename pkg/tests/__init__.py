"""Tests for matilda_detour."""
