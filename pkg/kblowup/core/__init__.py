"""
KBlowup Core - Shared Infrastructure

- config.py: Settings (bounds, seeds, logging)
- logging.py: loguru setup
- exceptions.py: error hierarchy
- linalg.py: exact rank / nullspace helpers over QQ
- stability.py: windowed dimensions
- report.py: machine and text reports

Import explicitly when needed:
    from kblowup.core.config import settings
    from kblowup.core.exceptions import HypothesisError
"""

__all__ = [
    # Available modules (import explicitly):
    # - config
    # - logging
    # - exceptions
    # - linalg
    # - stability
    # - report
]
