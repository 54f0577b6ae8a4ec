"""Version information for Harmony.

This file is imported by ``harmony.__init__``,
and parsed by ``setup.py``.
"""

__version__ = '1.0.0'
