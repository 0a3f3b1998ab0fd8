"""Exception hierarchy shared across the package.

InputError covers everything a user can trigger through files or command
line arguments; anything else escaping the engine is treated as an internal
invariant violation by the CLI.
"""


class InputError(Exception):
    """Bad user input: malformed files, unknown names, mismatched dimensions."""


class FormatError(InputError):
    """A JSON document violates one of the altdef-*-v1 formats."""


class UnknownAlgebraError(InputError):
    """Catalog lookup with a name that is not built in."""


class InvalidJetError(InputError):
    """A deformation jet fails the deformation equation below its order."""


class NotACocycleError(InputError):
    """An infinitesimal handed to integrate() is not a 2-cocycle."""
