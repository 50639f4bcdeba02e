"""Construct policies from their declarative specifications."""

from prebandit.core.errors import InvalidInputError
from prebandit.model.types import ActionSpace, ScoreVector
from prebandit.policies.base import Policy
from prebandit.policies.baselines import OraclePolicy, UniformPolicy
from prebandit.policies.cbr import CbrPolicy
from prebandit.policies.schemas import CbrSpec, OracleSpec, PolicySpec, TrcbSpec, UniformSpec
from prebandit.policies.trcb import TrcbPolicy


def build_policy(spec: PolicySpec, v: ScoreVector, space: ActionSpace) -> Policy:
    """
    Fresh policy instance for one episode.

    Args:
        spec: Policy specification
        v: True scores (only the oracle looks at them)
        space: Action space of the episode

    Returns:
        Policy ready for its first round

    Raises:
        InvalidInputError: If the policy does not support the action space
    """
    space.check_arms(v.n)
    name = spec.display_name

    if isinstance(spec, TrcbSpec):
        if not space.is_restricted:
            raise InvalidInputError("TRCB needs the restricted variant")
        return TrcbPolicy(v.n, space.l, spec.c_shrink, spec.v_min, name=name)
    if isinstance(spec, CbrSpec):
        if space.is_restricted:
            raise InvalidInputError("CBR needs the flexible variant")
        return CbrPolicy(v.n, spec.s_shaped(), name=name)
    if isinstance(spec, UniformSpec):
        return UniformPolicy(v.n, space, name=name)
    if isinstance(spec, OracleSpec):
        return OraclePolicy(v, space, name=name)

    raise InvalidInputError(f"Unknown policy kind: {spec!r}")
