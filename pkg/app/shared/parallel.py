"""
Mapa paralelo sobre bloques de índices de tamaño fijo.

Los resultados se devuelven en el orden de los bloques, de modo que la
reducción posterior no depende del número de procesos.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


def block_ranges(n_items: int, block_size: int, start: int = 0) -> List[Tuple[int, int]]:
    """Particiona [start, n_items) en bloques [a, b) de tamaño fijo"""
    return [(a, min(a + block_size, n_items)) for a in range(start, n_items, block_size)]


def ordered_iter(
    fn: Callable[[Any], Any],
    items: Sequence[Any],
    workers: int = 1,
    initializer: Optional[Callable[..., None]] = None,
    initargs: Tuple = (),
) -> Iterator[Any]:
    """
    Aplica ``fn`` a cada elemento y entrega los resultados en el orden de entrada.

    Con un solo proceso se ejecuta en línea con el mismo inicializador, así
    ambos caminos evalúan exactamente el mismo código.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        if initializer is not None:
            initializer(*initargs)
        for item in items:
            yield fn(item)
        return

    logger.info(f"Repartiendo {len(items)} bloques entre {workers} procesos")
    with ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as pool:
        yield from pool.map(fn, items, chunksize=1)


def ordered_map(
    fn: Callable[[Any], Any],
    items: Sequence[Any],
    workers: int = 1,
    initializer: Optional[Callable[..., None]] = None,
    initargs: Tuple = (),
) -> List[Any]:
    return list(ordered_iter(fn, items, workers, initializer, initargs))
