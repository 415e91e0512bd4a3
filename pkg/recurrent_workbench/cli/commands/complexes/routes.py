import argparse

from recurrent_workbench.cli.commands.complexes.schema import (
    AnalyzeDTO,
    GalleryDTO,
    SurgeryDTO,
    ValidateDTO,
    WiseDTO,
)
from recurrent_workbench.cli.dependencies import COMPLEX, OUT, complex_repository, make_report
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.models.complex import ComplexSpec, GalleryKind
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.complexes import (
    classify_complex,
    collapse_free_edges,
    cone_off_spheres,
    degrees,
    euler_characteristic,
    gallery_components,
    homology_ranks,
    max_scalar_bits,
    subdivide,
    wise_complex,
)

router = CommandRouter()


def _surgery(namespace: argparse.Namespace, before: ComplexSpec, after: ComplexSpec) -> RunReport:
    artifacts = []
    if namespace.out is not None:
        artifacts.append(complex_repository.save(after, namespace.out))
    verdicts = SurgeryDTO(
        faces_before=len(before.faces),
        faces_after=len(after.faces),
        edges_before=len(before.edges),
        edges_after=len(after.edges),
        euler_before=euler_characteristic(before),
        euler_after=euler_characteristic(after),
    )
    return make_report(
        namespace,
        True,
        verdicts,
        inputs=[namespace.path],
        artifacts=artifacts,
        bits=max_scalar_bits(after),
    )


@router.command("validate", "Validate a complex file and report its degree class.", COMPLEX)
def validate(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    verdicts = ValidateDTO(
        vertices=len(c.vertices),
        edges=len(c.edges),
        faces=len(c.faces),
        complex_class=classify_complex(c).value,
        euler_characteristic=euler_characteristic(c),
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path], bits=max_scalar_bits(c))


@router.command("analyze", "Degrees, galleries, spheres and homology of a complex.", COMPLEX)
def analyze(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    degree_of = degrees(c)
    galleries = gallery_components(c)
    b0, b1 = homology_ranks(c)
    verdicts = AnalyzeDTO(
        degrees=degree_of,
        complex_class=classify_complex(c).value,
        thick_edges=sorted(edge for edge, degree in degree_of.items() if degree >= 3),
        galleries=[
            GalleryDTO(
                faces=sorted(gallery.faces),
                kind=gallery.kind.value,
                euler_characteristic=gallery.euler_characteristic,
                boundary_edges=sorted(gallery.boundary_edges),
            )
            for gallery in galleries
        ],
        spheres=sum(gallery.kind == GalleryKind.SPHERE for gallery in galleries),
        euler_characteristic=euler_characteristic(c),
        b0=b0,
        b1=b1,
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path], bits=max_scalar_bits(c))


@router.command("collapse", "Collapse free edges until none is left.", COMPLEX, OUT)
def collapse(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    return _surgery(namespace, c, collapse_free_edges(c))


@router.command(
    "subdivide",
    "Barycentric or altitude subdivision.",
    COMPLEX,
    argument("--mode", choices=("barycentric", "altitude"), default="barycentric"),
    OUT,
)
def subdivide_command(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    return _surgery(namespace, c, subdivide(c, namespace.mode))


@router.command("cone", "Cone off every sphere component.", COMPLEX, OUT)
def cone(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    return _surgery(namespace, c, cone_off_spheres(c))


@router.command("wise", "Nerve of the covering by closed 2-cells.", COMPLEX)
def wise(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    nerve = wise_complex(c)
    verdicts = WiseDTO(
        faces=len(c.faces),
        vertices=len(nerve.vertices),
        edges=len(nerve.edges),
        triangles=len(nerve.triangles),
        attached=list(nerve.attached),
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path])
