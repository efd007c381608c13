"""
KBlowup Engine - Structured Logging

Uses loguru for structured, colorized logging.
JSON format available for production or when LOG_JSON_FORMAT=true.
"""
import json
import sys
from datetime import datetime, timezone

from loguru import logger

from kblowup.core.config import settings


def json_formatter(record: dict) -> str:
    """JSON line formatter for loguru sinks"""
    log_entry = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "level": record["level"].name,
        "message": record["message"],
        "module": record["name"],
        "function": record["function"],
        "line": record["line"],
    }

    for key, value in record.get("extra", {}).items():
        if key != "module":
            log_entry[key] = value

    if record["exception"]:
        exc = record["exception"]
        log_entry["exception"] = {
            "type": exc.type.__name__ if exc.type else None,
            "value": str(exc.value) if exc.value else None,
        }

    # loguru treats the returned string as a template
    return json.dumps(log_entry, default=str).replace("{", "{{").replace("}", "}}") + "\n"


def setup_logging(level: str | None = None) -> None:
    """Configure structured logging on stderr (stdout is reserved for reports)"""
    logger.remove()
    level = level or settings.LOG_LEVEL

    if settings.LOG_JSON_FORMAT or settings.is_production:
        logger.add(sys.stderr, format=json_formatter, level=level, colorize=False)
    else:
        logger.add(
            sys.stderr,
            format=(
                "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
                "<level>{level: <8}</level> | "
                "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
                "<level>{message}</level>"
            ),
            level=level,
            colorize=True,
        )

    logger.debug(f"Logging configured for {settings.ENVIRONMENT} environment")


def get_logger(name: str):
    """Get a contextualized logger with module name bound"""
    return logger.bind(module=name)
