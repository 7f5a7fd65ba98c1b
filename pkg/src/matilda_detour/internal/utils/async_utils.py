"""Async helpers for fanning blocking work out to worker threads."""

import asyncio
import concurrent.futures
import threading
from typing import Awaitable, Callable, List, Sequence, TypeVar, cast

T = TypeVar("T")
R = TypeVar("R")

_background_loop: "asyncio.AbstractEventLoop | None" = None
_background_thread: "threading.Thread | None" = None
_lock = threading.Lock()


def _ensure_background_loop() -> asyncio.AbstractEventLoop:
    """Start (once) an event loop in a daemon thread and return it."""
    global _background_loop, _background_thread

    with _lock:
        if _background_loop is not None:
            return _background_loop

        ready = threading.Event()

        def run_loop() -> None:
            global _background_loop
            loop = asyncio.new_event_loop()
            asyncio.set_event_loop(loop)
            _background_loop = loop
            ready.set()
            try:
                loop.run_forever()
            finally:
                loop.close()

        _background_thread = threading.Thread(target=run_loop, name="detour-async", daemon=True)
        _background_thread.start()

    ready.wait()
    assert _background_loop is not None
    return _background_loop


def run_async(coro: Awaitable[T]) -> T:
    """
    Run a coroutine to completion from synchronous code.

    Uses ``asyncio.run`` when no loop is running in the current thread and falls
    back to a shared background loop otherwise (e.g. when called from a test that
    already runs inside an event loop).

    Args:
        coro: The coroutine or awaitable to execute

    Returns:
        The result of the coroutine
    """

    async def _wrapper() -> T:
        return await coro

    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return cast(T, asyncio.run(_wrapper()))

    loop = _ensure_background_loop()
    future: concurrent.futures.Future[T] = asyncio.run_coroutine_threadsafe(_wrapper(), loop)
    return future.result()


async def _gather_bounded(func: Callable[[T], R], items: Sequence[T], max_workers: int) -> List[R]:
    semaphore = asyncio.Semaphore(max_workers)

    async def _one(item: T) -> R:
        async with semaphore:
            return await asyncio.to_thread(func, item)

    # gather preserves the order of its arguments
    return list(await asyncio.gather(*(_one(item) for item in items)))


def gather_in_threads(func: Callable[[T], R], items: Sequence[T], max_workers: int = 1) -> List[R]:
    """Apply ``func`` to every item, at most ``max_workers`` at a time, keeping input order.

    With ``max_workers <= 1`` the items are processed inline on the calling thread.
    """
    if max_workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    return run_async(_gather_bounded(func, items, max_workers))


__all__ = ["run_async", "gather_in_threads"]
