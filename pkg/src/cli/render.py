"""
Result documents and their JSON / text renderings.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..strata import TautClass, canonicalize, class_to_json, describe_class


@dataclass
class ResultDocument:
    """
    Everything a run produces.

    components holds the graded classes (label names them, e.g. "ch" or "c");
    data holds non-class results such as divisors, formal polynomials or
    phi diagnostics; diff is theorem minus oracle per disagreeing degree.
    """
    request: Dict[str, Any]
    label: str = ""
    components: Dict[int, TautClass] = field(default_factory=dict)
    data: Dict[str, Any] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)
    diff: Dict[int, TautClass] = field(default_factory=dict)

    @property
    def agreement(self) -> Optional[bool]:
        return self.metadata.get("agreement")

    def fill_metadata(self) -> None:
        """Generator count and automorphism orders of every emitted generator."""
        generators = 0
        aut_orders: Dict[str, int] = {}
        for cls in self.components.values():
            for graph, _ in cls.items():
                generators += 1
                order = str(canonicalize(graph).aut_order)
                aut_orders[order] = aut_orders.get(order, 0) + 1
        self.metadata["generators"] = generators
        self.metadata["autOrders"] = dict(sorted(aut_orders.items(), key=lambda kv: int(kv[0])))

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"request": self.request}
        if self.components:
            document["result"] = {
                "label": self.label,
                "degrees": [{"degree": s, "terms": class_to_json(cls)}
                            for s, cls in sorted(self.components.items())],
            }
        if self.data:
            document["data"] = self.data
        document["metadata"] = self.metadata
        if self.diff:
            document["diff"] = [{"degree": s, "terms": class_to_json(cls)}
                                for s, cls in sorted(self.diff.items())]
        return document


def _text_value(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=False, separators=(',', ':'))
    return str(value)


def render_text(doc: ResultDocument) -> str:
    lines: List[str] = []
    req = doc.request
    lines.append(f"command: {req['command']} g={req['g']} markings={','.join(req['markings'])}")
    if doc.label:
        lines.append(f"{doc.label}:")
    for s, cls in sorted(doc.components.items()):
        lines.append(f"deg {s}: {describe_class(cls)}")
    for key, value in doc.data.items():
        lines.append(f"{key}: {_text_value(value)}")
    if doc.agreement is not None:
        lines.append(f"agreement: {'true' if doc.agreement else 'false'}")
    for s, cls in sorted(doc.diff.items()):
        lines.append(f"diff deg {s}: {describe_class(cls)}")
    if "elapsed" in doc.metadata:
        lines.append(f"elapsed: {doc.metadata['elapsed']}")
    return "\n".join(lines) + "\n"


def render_output(doc: ResultDocument, fmt: str = 'json') -> bytes:
    """
    Serialize a document.

    Args:
        doc: The computed document
        fmt: "json" or "text"

    Returns:
        UTF-8 bytes, identical for identical documents
    """
    if fmt == 'json':
        return (json.dumps(doc.to_json(), indent=2, ensure_ascii=False) + "\n").encode('utf-8')
    if fmt == 'text':
        return render_text(doc).encode('utf-8')
    raise ValueError(f"unknown output format {fmt!r}")

