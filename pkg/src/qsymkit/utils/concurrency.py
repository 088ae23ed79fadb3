from typing import Any, Callable, Iterable, List, Coroutine
import asyncio
from tqdm.asyncio import tqdm_asyncio
from qsymkit.settings import settings


async def async_batch_gather(
    coroutines: List[Coroutine],
    batch_size: int = 25,
    description: str = "Processing batch",
):
    total_num = len(coroutines)
    results = []

    # Process in batches so at most batch_size workers run at once
    for i in range(0, total_num, batch_size):
        batch = coroutines[i : i + batch_size]
        batch_results = await tqdm_asyncio.gather(
            *batch,
            desc=f"{description} {i}-{i+len(batch)}/{total_num}",
            disable=not settings.show_progress,
        )
        results.extend(batch_results)

    return results


async def async_index_wrapper(func, index, *args, **kwargs):
    output = await func(*args, **kwargs)
    return index, output


def _inside_event_loop() -> bool:
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return False

    return True


def run_in_workers(
    func: Callable[[Any], Any],
    items: Iterable[Any],
    description: str = "Processing batch",
) -> List[Any]:
    """Apply func to every item on worker threads; results come back in item order."""
    items = list(items)
    worker_count = settings.worker_count

    if len(items) <= 1 or worker_count <= 1 or _inside_event_loop():
        return [func(item) for item in items]

    async def _run():
        coroutines = [
            async_index_wrapper(asyncio.to_thread, index, func, item)
            for index, item in enumerate(items)
        ]
        indexed = await async_batch_gather(
            coroutines, batch_size=worker_count, description=description
        )
        return [output for _, output in sorted(indexed, key=lambda pair: pair[0])]

    return asyncio.run(_run())
