import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from prepocr import constants

T = TypeVar("T")
R = TypeVar("R")

_executor: Optional[ThreadPoolExecutor] = None
_pool_size: int = constants.DEFAULT_THREAD_POOL_PARALLELISM_DEGREE
_worker_state = threading.local()


def init(thread_pool_parallelism_degree: int) -> None:
    global _executor, _pool_size
    shutdown()
    _pool_size = max(1, thread_pool_parallelism_degree)
    if _pool_size > 1:
        _executor = ThreadPoolExecutor(
            max_workers=_pool_size,
            thread_name_prefix="prepocr-worker",
            initializer=_mark_worker_thread
        )


def shutdown() -> None:
    global _executor, _pool_size
    if _executor is not None:
        _executor.shutdown(wait=True)
    _executor = None
    _pool_size = constants.DEFAULT_THREAD_POOL_PARALLELISM_DEGREE


def get_pool_size() -> int:
    return _pool_size


def map_tasks(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Runs `fn` over `items` on the shared pool and returns results in input order.

    Calls issued from inside a pool worker run inline: nested work (e.g. patch batches of a page that is
    itself a pool task) never waits on the pool it occupies.
    """
    items = list(items)
    if _executor is None or len(items) <= 1 or getattr(_worker_state, "in_worker", False):
        return [fn(item) for item in items]
    futures = [_executor.submit(fn, item) for item in items]
    return [future.result() for future in futures]


def _mark_worker_thread() -> None:
    _worker_state.in_worker = True
