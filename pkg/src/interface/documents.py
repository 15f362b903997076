"""
Input Documents

Readers for every file the command line accepts. A path argument may also
be "library:<name>" for one of the standard complexes.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr

from coloring.colorings import Coloring, coloring_hom
from common.errors import InputError
from common.jsonio import read_json, validate_document
from complexes.library import named_complex
from complexes.simplicial import SimplicialComplex, from_facets
from coxeter.io import system_from_document
from coxeter.presentation import coxeter_presentation
from coxeter.system import CoxeterSystem
from presentations.homomorphisms import TwoGroupHom
from presentations.presentation import Presentation
from presentations.words import Word

logger = logging.getLogger(__name__)

LIBRARY_PREFIX = "library:"

WordDocument = Union[StrictStr, List[Union[StrictStr, Tuple[StrictStr, StrictInt]]]]


class ComplexDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    facets: List[List[Union[StrictStr, StrictInt]]] = Field(min_length=1)


class ColoringDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    classes: Dict[str, List[StrictStr]]


class HomDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rank: int = Field(ge=0)
    images: Dict[str, List[int]]


class PresentationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    generators: List[StrictStr]
    relators: List[WordDocument] = Field(default_factory=list)


class ImagesDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    images: Dict[str, WordDocument]


def read_document(path: str) -> Tuple[Any, str]:
    """Raw JSON of a file, or the document of a library complex."""
    if path.startswith(LIBRARY_PREFIX):
        return named_complex(path[len(LIBRARY_PREFIX):]).to_document(), path
    return read_json(Path(path)), path


def _is_coxeter_graph(raw: Any) -> bool:
    return isinstance(raw, dict) and "vertices" in raw


def _complex(raw: Any, source: str) -> SimplicialComplex:
    document = validate_document(ComplexDocument, raw, source)
    try:
        return from_facets([str(v) for v in facet] for facet in document.facets)
    except InputError as e:
        raise InputError(e.message, source=source)


def load_complex(path: str) -> SimplicialComplex:
    raw, source = read_document(path)
    return _complex(raw, source)


def load_system(path: str) -> CoxeterSystem:
    """A Coxeter graph file, or a complex read as its right-angled system."""
    raw, source = read_document(path)
    if _is_coxeter_graph(raw):
        return system_from_document(raw, source)
    logger.debug(f"{source}: reading a complex as its right-angled system")
    return CoxeterSystem.right_angled(_complex(raw, source))


def load_coloring(path: str) -> Coloring:
    raw, source = read_document(path)
    document = validate_document(ColoringDocument, raw, source)
    try:
        return Coloring.from_classes(document.classes)
    except InputError as e:
        raise InputError(e.message, source=source)


def load_hom(path: str) -> TwoGroupHom:
    """A homomorphism file {"rank", "images"} or a colouring file."""
    raw, source = read_document(path)
    try:
        if isinstance(raw, dict) and "classes" in raw:
            return coloring_hom(Coloring.from_classes(validate_document(ColoringDocument, raw, source).classes))
        document = validate_document(HomDocument, raw, source)
        for gen, vector in document.images.items():
            if any(bit not in (0, 1) for bit in vector):
                raise InputError(f"image of {gen!r} has entries outside 0/1", source=source, location=f"images.{gen}")
        return TwoGroupHom.from_vectors(document.rank, document.images)
    except InputError as e:
        if e.source:
            raise
        raise InputError(e.message, source=source)


def load_presentation(path: str) -> Presentation:
    """A presentation file, or a Coxeter graph read as its Coxeter presentation."""
    raw, source = read_document(path)
    if _is_coxeter_graph(raw):
        return coxeter_presentation(system_from_document(raw, source))
    document = validate_document(PresentationDocument, raw, source)
    try:
        return Presentation.build(document.generators, document.relators)
    except InputError as e:
        raise InputError(e.message, source=source)


def load_images(path: str) -> Dict[str, Word]:
    raw, source = read_document(path)
    document = validate_document(ImagesDocument, raw, source)
    try:
        return {gen: Word.coerce(image) for gen, image in document.images.items()}
    except InputError as e:
        raise InputError(e.message, source=source, location="images")
