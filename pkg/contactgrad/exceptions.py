class ContactGradException(Exception):
    """Base class for all errors raised by contactgrad; `message` is shown to CLI users."""
    def __init__(self, message=""):
        super().__init__(message)
        self.message = message


class InvalidRootSystemException(ContactGradException):
    """Raised when a root system is requested for an unsupported type/rank pair."""
    def __init__(self, type_label, rank):
        super().__init__("No simple root system of type {type}{rank}.".format(type=type_label, rank=rank))


class NotARootException(ContactGradException):
    """Raised when a vector in the simple-root basis is not a root."""
    def __init__(self, coords):
        super().__init__("{coords} is not a root.".format(coords=tuple(coords)))


class DimensionMismatchException(ContactGradException):
    def __init__(self, expected, got):
        super().__init__("Expected a vector in dimension {expected}, got index {got}.".format(expected=expected,
                                                                                            got=got))


class FieldMismatchException(ContactGradException):
    """Raised when combining a complex and a real Lie algebra."""
    def __init__(self, left, right):
        super().__init__("Cannot combine a {left} algebra with a {right} algebra.".format(left=left, right=right))


class InvalidRealFormException(ContactGradException):
    def __init__(self, name, params=None):
        super().__init__("Invalid parameters {params} for real form {name}.".format(params=params or {}, name=name))


class NotInAlgebraException(ContactGradException):
    """Raised when a matrix (or a bracket of basis matrices) is not in the realized algebra."""
    def __init__(self, label):
        super().__init__("Element {label} does not belong to the algebra.".format(label=label))


class TripleRelationException(ContactGradException):
    """Raised when (h, e, f) violates one of the sl2 relations; carries the residual vector."""
    def __init__(self, relation, residual):
        self.relation = relation
        self.residual = residual
        super().__init__("Relation {relation} fails with residual {residual}.".format(relation=relation,
                                                                                     residual=residual))


class NonIntegralEigenvalueException(ContactGradException):
    """Raised when the integer eigenvalue scan of ad_h does not exhaust the algebra."""
    def __init__(self, dim_found, dim):
        super().__init__("Integer eigenspaces of ad_h span only {found} of {dim} dimensions; "
                         "(h, e, f) is not an sl2-triple of this algebra.".format(found=dim_found, dim=dim))


class InvalidPartitionException(ContactGradException):
    def __init__(self, partition):
        super().__init__("Partition {partition} must have positive entries.".format(partition=list(partition)))


class MixedParityPartitionException(ContactGradException):
    """Raised in strict mode when the parts of a partition do not share parity."""
    def __init__(self, partition):
        super().__init__("Partition {partition} mixes parities and defines no SO3-structure."
                         .format(partition=list(partition)))


class UnknownRealFormException(ContactGradException):
    def __init__(self, name):
        super().__init__("Unknown real form '{name}'.".format(name=name))


class UnknownAlgebraException(ContactGradException):
    def __init__(self, name):
        super().__init__("Could not parse algebra name '{name}'.".format(name=name))


class ZeroFormException(ContactGradException):
    def __init__(self):
        super().__init__("The one-form is identically zero.")


class ConicalFormException(ContactGradException):
    """Raised when a contactization is requested for a form vanishing on its stabilizer."""
    def __init__(self):
        super().__init__("The form vanishes on its stabilizer (conical orbit); no contactization.")


class DegenerateContactFormException(ContactGradException):
    def __init__(self, rank, dim):
        super().__init__("d(theta) has rank {rank} on a complement of dimension {dim}.".format(rank=rank, dim=dim))


class DatasetValidationException(ContactGradException):
    def __init__(self, path, reason):
        super().__init__("Dataset {path} is invalid: {reason}".format(path=path, reason=reason))
