from tqdm import tqdm

from .errors import BudgetExceeded


def check_budget(count: int, budget: int, what: str):
    "Raises `BudgetExceeded` if `count` is larger than `budget`"
    if count > budget:
        raise BudgetExceeded(f"{what}: {count} exceeds the budget of {budget}", count=int(count), budget=int(budget))


def progress(iterable, context=None, desc: str = None, total: int = None):
    "Wraps `iterable` in a tqdm progress bar when `context.show_progress` is set"
    if context is None or not context.show_progress:
        return iterable
    return tqdm(iterable, desc=desc, total=total)
