from .engine import (
    DEFAULT_CAP,
    ElementSet,
    EnumerationCapExceeded,
    OrderCapExceeded,
    element_order,
    element_orders,
    enumerate_group,
    is_solvable,
    is_solvable_spec,
    spectrum_of,
)
from .field import FieldCtx, FieldElem, FieldError, field_make
from .matrices import suzuki_generators
from .specs import Cyclic, DirectProduct, FrobeniusMetacyclic, GroupSpec, GroupSpecError, MatGenerators, PermGenerators
