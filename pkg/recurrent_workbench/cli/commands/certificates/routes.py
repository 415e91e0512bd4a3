import argparse
from pathlib import Path

from recurrent_workbench.cli.commands.certificates.schema import CertifyDTO, VerifyDTO
from recurrent_workbench.cli.dependencies import (
    COMPLEX,
    OUT,
    certificate_repository,
    complex_repository,
    make_report,
)
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.certifier import build_dumbbell, verify_certificate
from recurrent_workbench.services.complexes import max_scalar_bits
from recurrent_workbench.services.quadratic import format_scalar

router = CommandRouter()


@router.command("certify-free", "Build a dumbbell certificate for a free subgroup.", COMPLEX, OUT)
def certify_free(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    certificate = build_dumbbell(c)
    verdict = verify_certificate(c, certificate)
    artifacts = []
    if namespace.out is not None:
        artifacts.append(certificate_repository.save(certificate, namespace.out))
    verdicts = CertifyDTO(
        base_edge=certificate.base_edge,
        t=format_scalar(certificate.t),
        directions=[token.label() for token in certificate.directions],
        paths={path.name: len(path.tokens) for path in certificate.paths},
        violations=[f"{clause}: {detail}" for clause, detail in verdict.violations],
    )
    return make_report(
        namespace,
        verdict.valid,
        verdicts,
        inputs=[namespace.path],
        artifacts=artifacts,
        bits=max_scalar_bits(c),
    )


@router.command(
    "verify-cert",
    "Re-check a stored certificate against its complex.",
    COMPLEX,
    argument("certificate", type=Path, help="certificate file (.cert)"),
)
def verify_cert(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    certificate = certificate_repository.load(namespace.certificate)
    verdict = verify_certificate(c, certificate)
    verdicts = VerifyDTO(
        valid=verdict.valid,
        clauses=sorted(verdict.clauses),
        violations=[f"{clause}: {detail}" for clause, detail in verdict.violations],
    )
    return make_report(
        namespace,
        verdict.valid,
        verdicts,
        inputs=[namespace.path, namespace.certificate],
        bits=max_scalar_bits(c),
    )
