"""Kempe chains, Kempe classes and frozen colourings of small graphs."""

from ._kempe import *  # noqa: F401,F403
from ._kempe import CertificateRejected, Colouring, Graph, InputError, ResourceError  # noqa: F401

__version__ = "0.1.0"
