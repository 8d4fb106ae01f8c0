"""
Command-line and config-file parsing into a validated ComputationRequest.

Precedence: the caller's config mapping, then the JSON file named by
--config, then explicit flags.
"""

import argparse
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..combin import MarkedSpace
from ..jacobian import OneNodePolarisation, polarisation_from_json, polarisation_to_json
from ..ucurve import DivisorSpec

LOGGER = logging.getLogger(__name__)

COMMANDS = ('chern-char', 'chern-classes', 'bn-class', 'drc-divisor', 'validate-phi')
FORMATS = ('json', 'text')
CHERN_MODES = ('theorem', 'oracle', 'both')
BN_MODES = ('symbolic', 'expanded')

# command -> (allowed modes, default mode)
MODES: Dict[str, Any] = {
    'chern-char': (CHERN_MODES, 'theorem'),
    'chern-classes': (CHERN_MODES, 'theorem'),
    'bn-class': (BN_MODES, 'symbolic'),
    'drc-divisor': (BN_MODES, 'symbolic'),
    'validate-phi': ((), None),
}


class RequestError(ValueError):
    """Invalid user input on the command line or in a config file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise RequestError(message)


@dataclass(frozen=True)
class RunOptions:
    """Delivery settings; they never change the computed document."""
    out: Optional[str] = None
    timing: bool = False
    workers: Optional[int] = None
    log_level: Optional[str] = None


@dataclass(frozen=True)
class ComputationRequest:
    command: str
    space: MarkedSpace
    divisor: DivisorSpec
    phi: Optional[OneNodePolarisation] = None
    r: int = 0
    smax: Optional[int] = None
    mode: Optional[str] = None
    format: str = 'json'
    i: Optional[str] = None
    j: Optional[str] = None
    negate: bool = False
    options: RunOptions = field(default_factory=RunOptions, compare=False)

    def echo(self) -> Dict[str, Any]:
        """Config-file form of the request; parse_request([], echo) rebuilds it."""
        return {
            "command": self.command,
            "g": self.space.g,
            "markings": list(self.space.markings),
            "ell": self.divisor.ell,
            "d": dict(self.divisor.d),
            "a": self.divisor.to_json()["a"],
            "phi": polarisation_to_json(self.phi) if self.phi is not None else None,
            "r": self.r,
            "smax": self.smax,
            "mode": self.mode,
            "format": self.format,
            "i": self.i,
            "j": self.j,
            "negate": self.negate,
        }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='tautchern',
                     description="Exact Chern characters of pushforwards of universal line bundles")
    parser.add_argument('command', nargs='?', choices=COMMANDS)
    parser.add_argument('--config', help="JSON file with request defaults")
    parser.add_argument('--g', type=int, help="Genus")
    parser.add_argument('--markings', help="Comma separated marking labels, e.g. 1,2,3")
    parser.add_argument('--ell', type=int, help="Coefficient of the relative dualising class")
    parser.add_argument('--d', help="Section coefficients, e.g. 1=2,2=-1")
    parser.add_argument('--a', help="Boundary coefficients, e.g. '1:1=2;0:1,2=-1'")
    parser.add_argument('--phi-file', dest='phi_file', help="JSON stability parameter")
    parser.add_argument('--r', type=int, help="Brill-Noether rank")
    parser.add_argument('--smax', type=int, help="Highest degree")
    parser.add_argument('--mode', help="theorem|oracle|both or symbolic|expanded")
    parser.add_argument('--format', choices=FORMATS)
    parser.add_argument('--out', help="Write the document here instead of stdout")
    parser.add_argument('--i', help="First marking for drc-divisor")
    parser.add_argument('--j', help="Second marking for drc-divisor")
    parser.add_argument('--negate', action='store_true', default=None,
                        help="chern-classes: compute c(-F)")
    parser.add_argument('--timing', action='store_true', default=None,
                        help="Record elapsed seconds in the metadata")
    parser.add_argument('--workers', type=int, help="Worker threads")
    parser.add_argument('--log-level', dest='log_level', help="Logging level")
    return parser


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError as exc:
        raise RequestError(f"{what} must be an integer, got {text!r}") from exc


def parse_d_flag(text: str) -> Dict[str, int]:
    """'1=2,3=-1' -> {'1': 2, '3': -1}."""
    result: Dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(','))):
        label, sep, value = item.partition('=')
        if not sep:
            raise RequestError(f"--d entries look like label=value, got {item!r}")
        result[label.strip()] = _parse_int(value, f"d_{label.strip()}")
    return result


def parse_a_flag(text: str) -> List[Dict[str, Any]]:
    """'1:1=2;0:1,2=-1' -> [{'h': 1, 'S': ['1'], 'value': 2}, ...]."""
    entries = []
    for item in filter(None, (part.strip() for part in text.split(';'))):
        head, sep, value = item.rpartition('=')
        genus, colon, labels = head.partition(':')
        if not sep or not colon:
            raise RequestError(f"--a entries look like h:labels=value, got {item!r}")
        entries.append({
            "h": _parse_int(genus, "bipartition genus"),
            "S": [p.strip() for p in labels.split(',') if p.strip()],
            "value": _parse_int(value, f"a({item})"),
        })
    return entries


def load_json(path: str) -> Dict[str, Any]:
    try:
        with open(Path(path), 'r') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise RequestError(f"cannot read JSON from {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise RequestError(f"{path} must hold a JSON object")
    return data


def _flag_values(args: argparse.Namespace) -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for key in ('command', 'g', 'ell', 'phi_file', 'r', 'smax', 'mode', 'format', 'out',
                'i', 'j', 'negate', 'timing', 'workers', 'log_level'):
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    if args.markings is not None:
        values['markings'] = [p.strip() for p in args.markings.split(',') if p.strip()]
    if args.d is not None:
        values['d'] = parse_d_flag(args.d)
    if args.a is not None:
        values['a'] = parse_a_flag(args.a)
    if args.phi_file is not None:
        values['phi'] = None
    return values


def _resolve_smax(command: str, smax: Any, space: MarkedSpace) -> Optional[int]:
    if smax is None:
        return space.dim if command in ('chern-char', 'chern-classes') else None
    if isinstance(smax, bool) or not isinstance(smax, int):
        raise RequestError(f"smax must be an integer, got {smax!r}")
    if not 0 <= smax <= space.dim:
        raise RequestError(f"smax must lie in [0, {space.dim}], got {smax}")
    return smax


def parse_request(argv: Sequence[str], config: Optional[Mapping[str, Any]] = None) -> ComputationRequest:
    """
    Build a validated request.

    Args:
        argv: Command-line arguments without the program name
        config: Lowest-precedence settings (app defaults or a request echo)

    Returns:
        ComputationRequest
    """
    args = build_parser().parse_args(list(argv))
    merged: Dict[str, Any] = {k: v for k, v in dict(config or {}).items() if v is not None}
    if args.config:
        merged.update({k: v for k, v in load_json(args.config).items() if v is not None})
    merged.update(_flag_values(args))

    command = merged.get('command')
    if command not in COMMANDS:
        raise RequestError(f"command must be one of {', '.join(COMMANDS)}, got {command!r}")
    if 'g' not in merged:
        raise RequestError("--g is required")

    try:
        markings = [str(p) for p in merged.get('markings', ['1'])]
        space = MarkedSpace(merged['g'], tuple(markings))
        divisor = DivisorSpec.from_json(space, {
            "ell": merged.get('ell', 0),
            "d": {str(k): v for k, v in dict(merged.get('d', {})).items()},
            "a": merged.get('a', []),
        })
        phi = None
        if merged.get('phi_file'):
            phi = polarisation_from_json(space, load_json(merged['phi_file']))
        elif merged.get('phi') is not None:
            phi = polarisation_from_json(space, merged['phi'])
    except RequestError:
        raise
    except (ValueError, TypeError) as exc:
        raise RequestError(str(exc)) from exc

    allowed, default_mode = MODES[command]
    mode = merged.get('mode', default_mode) if allowed else None
    if allowed and mode not in allowed:
        raise RequestError(f"{command} accepts --mode {'|'.join(allowed)}, got {mode!r}")

    fmt = merged.get('format', 'json')
    if fmt not in FORMATS:
        raise RequestError(f"format must be json or text, got {fmt!r}")

    r = merged.get('r', 0)
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise RequestError(f"r must be a non-negative integer, got {r!r}")

    i, j = merged.get('i'), merged.get('j')
    if command == 'drc-divisor':
        if i is None or j is None:
            raise RequestError("drc-divisor needs --i and --j")
        i, j = str(i), str(j)
        for label in (i, j):
            if label not in space.markings:
                raise RequestError(f"unknown marking {label!r}; markings are {list(space.markings)}")
    if command == 'validate-phi' and phi is None:
        raise RequestError("validate-phi needs a phi document (--phi-file or 'phi' in the config)")

    options = RunOptions(out=merged.get('out'), timing=bool(merged.get('timing', False)),
                         workers=merged.get('workers'), log_level=merged.get('log_level'))
    request = ComputationRequest(
        command=command, space=space, divisor=divisor, phi=phi, r=r,
        smax=_resolve_smax(command, merged.get('smax'), space), mode=mode, format=fmt,
        i=i, j=j, negate=bool(merged.get('negate', False)), options=options)
    LOGGER.debug("parsed request: %s", request.echo())
    return request
