"""Checks for ring maps between presented quotient rings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .polycore import GroebnerBasis, Polynomial, Ring, buchberger, substitute


@dataclass
class IsoReport:
    forward_defined: bool
    backward_defined: bool
    forward_then_backward: bool
    backward_then_forward: bool

    @property
    def ok(self) -> bool:
        return (self.forward_defined and self.backward_defined
                and self.forward_then_backward and self.backward_then_forward)

    def to_dict(self) -> dict:
        return {
            "forward_defined": self.forward_defined,
            "backward_defined": self.backward_defined,
            "round_trip_source": self.forward_then_backward,
            "round_trip_target": self.backward_then_forward,
            "isomorphism": self.ok,
        }


def maps_into(ideal: Sequence[Polynomial], images: Mapping[str, Polynomial], target: Ring,
              target_gb: GroebnerBasis) -> bool:
    return all(target_gb.contains(substitute(p, images, target)) for p in ideal)


def check_isomorphism(src: Ring, src_ideal: Sequence[Polynomial], tgt: Ring, tgt_ideal: Sequence[Polynomial],
                      forward: Mapping[str, Polynomial], backward: Mapping[str, Polynomial]) -> IsoReport:
    """Do ``forward`` and ``backward`` give mutually inverse maps src/I <-> tgt/J?

    Variables missing from a map go to the same-named variable of the other ring.
    """
    gs = buchberger(list(src_ideal), ring=src)
    gt = buchberger(list(tgt_ideal), ring=tgt)
    fwd_ok = maps_into(src_ideal, forward, tgt, gt)
    bwd_ok = maps_into(tgt_ideal, backward, src, gs)
    st = all(gs.contains(substitute(substitute(src.gen(v), forward, tgt), backward, src) - src.gen(v))
             for v in src.names)
    ts = all(gt.contains(substitute(substitute(tgt.gen(v), backward, src), forward, tgt) - tgt.gen(v))
             for v in tgt.names)
    return IsoReport(fwd_ok, bwd_ok, st, ts)
