"""Exception taxonomy shared by all modules; the CLI maps these to exit codes."""


class MeyerionError(Exception):
    pass


class InputError(MeyerionError):
    """Malformed or inconsistent user input (CLI exit code 1)."""


class InvariantError(MeyerionError):
    """An internal invariant failed; indicates a bug or an input outside the
    supported class, e.g. a non-almost-canonical scheme (CLI exit code 2)."""


class ReliabilityError(MeyerionError):
    """A request exceeds the region where a finite patch is trustworthy
    (CLI exit code 3)."""


class UnsupportedError(MeyerionError):
    """A declared limitation was hit, e.g. factorisation degree (exit code 3)."""
