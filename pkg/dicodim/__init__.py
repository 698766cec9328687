"""
dicodim - codimensions of varieties of algebras and dialgebras
"""

import os

__version__ = "0.1.0"
__logo__ = "∂"

# Configure loguru with DICODIM_LOG environment variable
if os.getenv("DICODIM_LOG"):
    from loguru import logger
    import sys

    log_level = os.getenv("DICODIM_LOG", "INFO").upper()
    logger.remove()
    logger.add(sys.stderr, level=log_level)
