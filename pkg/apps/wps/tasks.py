from celery import shared_task
import logging

from . import services

logger = logging.getLogger(__name__)


@shared_task(bind=True, max_retries=2, default_retry_delay=10)
def search_chunk_task(self, dim, bound, chunk):
    """Search one block of c-tuples; rows come back as plain dicts."""
    try:
        rows = services.search_chunk(dim, bound, [tuple(c) for c in chunk])
    except Exception as exc:
        logger.exception("search chunk failed (dim=%s, bound=%s, first=%s)", dim, bound, chunk[:1])
        raise self.retry(exc=exc)
    return [row.to_dict() for row in rows]
