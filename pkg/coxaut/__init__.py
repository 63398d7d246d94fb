"""Exact computations with the universal Coxeter group ``W_n`` and its automorphisms.

Layers follow Clean Architecture:
- domain: words, automorphisms, integer matrices, diagrams and exceptions
- application: verification use cases, DTOs and ports
- infrastructure: configuration, logging and the certificate repository
- interface: command-line transport
"""

__version__ = "0.1.0"
