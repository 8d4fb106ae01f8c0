"""
The five tautchern commands.
"""

import logging
from typing import Dict, Tuple

from ..arith import format_rational
from ..chern import (EXPANDED_MAX_GENUS, BNRequest, GradedRing, bn_pullback, chern_char_theorem,
                     drc_class, invert_to_chern)
from ..combin import bipartition_to_json
from ..jacobian import drc_divisor, modify_divisor, validate_phi
from ..oracle import chern_char_oracle
from ..strata import TautClass
from ..ucurve import DivisorSpec
from .base_command import BaseCommand
from .render import ResultDocument
from .request import ComputationRequest

LOGGER = logging.getLogger(__name__)


def effective_divisor(request: ComputationRequest) -> DivisorSpec:
    """The requested divisor, phi-modified when a phi document was given."""
    if request.phi is None:
        return request.divisor
    LOGGER.info("applying phi-modification to the divisor")
    return modify_divisor(request.divisor, request.phi)


def evaluate_character(request: ComputationRequest, divisor: DivisorSpec, smax: int,
                       workers: int) -> Tuple[Dict[int, TautClass], Dict[str, object], Dict[int, TautClass]]:
    """
    ch_0 .. ch_smax by the requested mode.

    Returns:
        (components, metadata, diff); with mode "both" the theorem side is
        returned and diff holds theorem minus oracle where they differ
    """
    metadata: Dict[str, object] = {"mode": request.mode}
    diff: Dict[int, TautClass] = {}
    if request.mode == 'oracle':
        return chern_char_oracle(divisor, smax, workers=workers), metadata, diff
    theorem = chern_char_theorem(divisor, smax, workers=workers).components
    if request.mode == 'both':
        oracle = chern_char_oracle(divisor, smax, workers=workers)
        for s in range(smax + 1):
            delta = theorem[s] - oracle[s]
            if delta:
                diff[s] = delta
        metadata["agreement"] = not diff
        if diff:
            LOGGER.warning("⚠️ theorem and oracle disagree in degrees %s", sorted(diff))
        else:
            LOGGER.info("✅ theorem and oracle agree in degrees 0..%d", smax)
    return theorem, metadata, diff


class ChernCharCommand(BaseCommand):
    def __init__(self, name: str = 'chern-char'):
        super().__init__(name)
        self.description = "Chern character of R pi_* O(D), degree by degree"

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        divisor = effective_divisor(request)
        components, metadata, diff = evaluate_character(request, divisor, request.smax, workers)
        doc = ResultDocument(request.echo(), "ch", components, metadata=metadata, diff=diff)
        if request.phi is not None:
            doc.data["divisor"] = divisor.to_json()
        return doc


class ChernClassesCommand(BaseCommand):
    def __init__(self, name: str = 'chern-classes'):
        super().__init__(name)
        self.description = "Chern classes c_t(R pi_* O(D)) or c_t(-R pi_* O(D))"

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        space = request.space
        if space.g > EXPANDED_MAX_GENUS:
            raise ValueError(f"chern-classes is limited to g <= {EXPANDED_MAX_GENUS}")
        divisor = effective_divisor(request)
        ch, metadata, diff = evaluate_character(request, divisor, request.smax, workers)
        c = invert_to_chern(ch, request.smax, negate=request.negate,
                            ring=GradedRing.tautological(space))
        label = "c(-F)" if request.negate else "c(F)"
        doc = ResultDocument(request.echo(), label, c, metadata=metadata, diff=diff)
        if request.phi is not None:
            doc.data["divisor"] = divisor.to_json()
        return doc


class BNClassCommand(BaseCommand):
    def __init__(self, name: str = 'bn-class'):
        super().__init__(name)
        self.description = "Brill-Noether pullback Delta^(r+1)_(g-d+r) c(-R pi_* O(D))"

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        divisor = effective_divisor(request)
        bn = BNRequest(request.r, divisor)
        result = bn_pullback(bn, request.smax, request.mode, workers)
        doc = ResultDocument(request.echo(), metadata={"mode": request.mode})
        doc.data.update({"r": bn.r, "d": bn.d, "rho": bn.rho, "codimension": bn.codimension})
        if result.mode == 'symbolic':
            doc.data["value"] = str(result.value)
            doc.data["inCharacter"] = str(result.in_character)
        else:
            doc.label = "bn"
            doc.components = {bn.codimension: result.value}
        return doc


class DRCDivisorCommand(BaseCommand):
    def __init__(self, name: str = 'drc-divisor'):
        super().__init__(name)
        self.description = "The divisor D_ij(phi) and its class c_g(-R pi_* O(D_ij(phi)))"

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        space = request.space
        if request.phi is None:
            divisor = drc_divisor(space, request.i, request.j)
        else:
            raw = DivisorSpec(space, 0, {request.i: 1, request.j: -1} if request.i != request.j else {})
            divisor = modify_divisor(raw, request.phi)
        doc = ResultDocument(request.echo(), metadata={"mode": request.mode})
        doc.data["divisor"] = divisor.to_json(include_zero=True)
        result = drc_class(space, request.i, request.j, request.phi, request.mode,
                           request.smax, workers)
        if result.mode == 'symbolic':
            doc.data["value"] = str(result.value)
            doc.data["inCharacter"] = str(result.in_character)
        else:
            doc.label = "drc"
            doc.components = {space.g: result.value}
        return doc


class ValidatePhiCommand(BaseCommand):
    def __init__(self, name: str = 'validate-phi'):
        super().__init__(name)
        self.description = "One-node nondegeneracy check of a stability parameter"

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        ok, diagnostics = validate_phi(request.phi)
        doc = ResultDocument(request.echo())
        doc.data["valid"] = ok
        doc.data["diagnostics"] = [
            dict(bipartition_to_json(request.space, diag.bipartition),
                 value=format_rational(diag.value), reason=diag.reason)
            for diag in diagnostics]
        return doc
