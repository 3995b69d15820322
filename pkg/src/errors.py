"""
Taucheck exceptions

Every error raised by the library derives from TaucheckError so callers
(and the CLI exit-code mapping) can catch the whole family at once.
"""

from typing import Any, Dict, Optional, Tuple


class TaucheckError(RuntimeError):
    """Base exception for taucheck"""


class DimensionError(TaucheckError, ValueError):
    """Shape or ambient-dimension mismatch"""


class PresentationError(TaucheckError, ValueError):
    """Invalid quiver presentation or module action data"""

    def __init__(self, message: str, *, basis_pair: Optional[Tuple[str, str]] = None):
        super().__init__(message)
        self.basis_pair = basis_pair


class PreconditionError(TaucheckError):
    """An operation was called on input outside its domain"""


class UnsupportedAlgebraError(TaucheckError):
    """The algebra does not carry the structure the operation needs (e.g. a radical)"""


class UndecidedError(TaucheckError):
    """A search budget ran out before a yes/no answer could be certified"""


class FormatError(TaucheckError):
    """Parse error in an .alg or .mod file"""

    def __init__(self, message: str, *, path: Optional[str] = None, line: Optional[int] = None):
        location = f"{path or '<input>'}:{line}" if line is not None else (path or "<input>")
        super().__init__(f"{location}: {message}")
        self.path = path
        self.line = line


class FeasibilityError(TaucheckError):
    """Enumeration refused because its estimated cost is too large"""

    def __init__(self, message: str, *, estimate: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.estimate: Dict[str, Any] = dict(estimate or {})
