"""
Coxeter Graph Files

{"vertices": [...], "edges": [{"u": "a", "v": "b", "m": 2}, ...],
 "default": "infinity" | "two"}
"""

from typing import Any, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt

from common.errors import InputError
from common.jsonio import dump_json, load_json_text, validate_document

from .system import INFINITY, CoxeterSystem, label_text


class EdgeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    u: str
    v: str
    m: Union[StrictInt, Literal["infinity"]]


class CoxeterGraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertices: List[str] = Field(min_length=1)
    edges: List[EdgeDocument] = Field(default_factory=list)
    default: Literal["infinity", "two"] = "infinity"


def system_from_document(raw: Any, source: str = "<input>") -> CoxeterSystem:
    document = validate_document(CoxeterGraphDocument, raw, source)
    edges = []
    for i, edge in enumerate(document.edges):
        m = INFINITY if edge.m == "infinity" else edge.m
        if m != INFINITY and m < 2:
            raise InputError(f"label {m} on {edge.u}-{edge.v} is below 2", source=source, location=f"edges.{i}.m")
        edges.append((edge.u, edge.v, m))
    try:
        return CoxeterSystem.build(document.vertices, edges, document.default)
    except InputError as e:
        if e.source:
            raise
        raise InputError(e.message, source=source)


def parse_coxeter_graph(text: str, source: str = "<input>") -> CoxeterSystem:
    return system_from_document(load_json_text(text, source), source)


def system_to_document(sys: CoxeterSystem) -> dict:
    return {
        "vertices": list(sys.vertices),
        "edges": [{"u": u, "v": v, "m": label_text(m)} for u, v, m in sys.edge_list()],
        "default": sys.default,
    }


def dump_coxeter_graph(sys: CoxeterSystem) -> str:
    """Canonical JSON text; parse_coxeter_graph reads it back to an equal system."""
    return dump_json(system_to_document(sys))
