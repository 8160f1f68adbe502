"""Quaternionic coadjoint orbits, Lie-Poisson brackets and rigid-body flows."""

import json as _json

from ._qorbit import (
    Ad,
    AlgebraElement,
    ConfigError,
    DomainError,
    DualElement,
    DualTangent,
    FdOptions,
    GroupElement,
    IntegrationError,
    InvariantViolation,
    PureQuaternion,
    Quaternion,
    UnitQuaternion,
    UnsupportedField,
    algebra_inner,
    bracket,
    bracket_table,
    casimir,
    coad,
    conj,
    cross,
    d_theta_numeric,
    exp_group,
    group_inv,
    group_mul,
    infinitesimal_generator,
    inner,
    inverse,
    kks_form,
    lie_poisson_bracket,
    liouville_pullback_residual,
    liouville_sign,
    norm,
    normal_form,
    orbit_point,
    pairing,
    phi,
    rotate,
    theta,
)
from . import _qorbit


def structure_constants():
    """Nonzero structure constants as a list of {i, j, k, c} dicts."""
    return _json.loads(_qorbit.structure_constants())


def orbit_report(x):
    """Classification, radius, Casimir and normal form of a point of g*."""
    return _json.loads(_qorbit.orbit_report(x))


def verify(seed=42, trials=1000, threads=0):
    """Runs the randomized property suite and returns the report as a dict."""
    return _json.loads(_qorbit.verify(seed, trials, threads))


def simulate(config_text):
    """Integrates a run file given as text; returns summary and CSV text."""
    return _json.loads(_qorbit.simulate(config_text))


__all__ = [name for name in dir() if not name.startswith("_")]
