from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

from arrangecount.util.log import LogManager

T = TypeVar("T")
R = TypeVar("R")

_logger = LogManager.get_logger("Pool")


def ordered_map(
    func: Callable[[T], R], items: Sequence[T], workers: int = 1
) -> List[R]:
    """Apply `func` to every item and return the results in input order.

    With more than one worker the items are distributed over a process pool.
    Callers combine the results with exact arithmetic, so the outcome does not
    depend on the number of workers or on the completion order.

    :param func: picklable callable applied to every item
    :param items: work items
    :param workers: number of worker processes, 1 runs in-process
    :return: list of results, one per item, in the order of `items`
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    items = list(items)
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]

    _logger.debug(f"distributing {len(items)} items over {workers} workers")
    with Pool(min(workers, len(items))) as executor:
        futures = [executor.apply_async(func, (item,)) for item in items]
        return [future.get() for future in futures]
