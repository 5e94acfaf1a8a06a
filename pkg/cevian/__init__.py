from .core import Configuration, Mode, build_configuration, derived_points  # noqa
from .generators import GeneratorSpec  # noqa
from .pandas_extension import VerdictsAccessor  # noqa
from .projective import ProjLine, ProjPoint, join, meet  # noqa
from .statements import Statement, Verdict  # noqa
from .suite import run_suite  # noqa
from .triangle import Bary, TraceSet, Triangle  # noqa
