"""Exception types shared across the toolkit."""


class LangSampleError(Exception):
    """Base class for all toolkit-specific errors."""


class ParseError(LangSampleError):
    """Malformed or internally inconsistent input data."""


class ConfigError(LangSampleError):
    """Invalid or missing configuration (binarization maps, groupings, flags)."""


class MetadataError(LangSampleError):
    """Language metadata is missing or inconsistent with the feature data."""


class NoSharedCoverageError(LangSampleError):
    """One or more language pairs share no covered features.

    The coverage weight is undefined for such pairs, so no distance can be
    assigned. ``pairs`` holds every offending (id, id) pair.
    """

    def __init__(self, pairs):
        self.pairs = list(pairs)
        listing = "; ".join(f"({a}, {b})" for a, b in self.pairs[:20])
        more = "" if len(self.pairs) <= 20 else f" (+{len(self.pairs) - 20} more)"
        super().__init__(
            f"{len(self.pairs)} language pair(s) share no covered features: "
            f"{listing}{more}"
        )


class DegenerateDistancesError(LangSampleError):
    """All off-diagonal distances are equal; min-max normalization is undefined."""
