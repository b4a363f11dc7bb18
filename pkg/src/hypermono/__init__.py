"""hypermono: exact models of hypergeometric local monodromy data and the
arithmetic machinery used to pin down their finite monodromy groups."""

__version__ = "0.1.0"
