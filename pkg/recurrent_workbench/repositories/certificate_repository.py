from pathlib import Path

from recurrent_workbench.models.certificate import CertificateChord, CertificatePath, DumbbellCertificate
from recurrent_workbench.models.recurrence import DirectionToken, TransitionDigraph
from recurrent_workbench.repositories.files import (
    dump_document,
    parse_document,
    read_document,
    write_document,
)
from recurrent_workbench.repositories.schema import (
    ArcDocument,
    CertificateDocument,
    CertificatePathDocument,
    ChordDocument,
    DigraphDocument,
    TokenDocument,
)
from recurrent_workbench.services.quadratic import format_scalar, parse_scalar


def token_document(token: DirectionToken) -> TokenDocument:
    return TokenDocument(
        face=token.face,
        position=token.position,
        edge=token.edge,
        forward=token.forward,
        t=format_scalar(token.t),
        alpha=format_scalar(token.alpha),
        beta=format_scalar(token.beta),
    )


def token_from_document(document: TokenDocument) -> DirectionToken:
    return DirectionToken(
        face=document.face,
        position=document.position,
        edge=document.edge,
        forward=document.forward,
        t=parse_scalar(document.t),
        alpha=parse_scalar(document.alpha),
        beta=parse_scalar(document.beta),
    )


class CertificateRepository:
    """Class for reading and writing dumbbell certificates (.cert) and digraph dumps."""

    def load(self, path: Path) -> DumbbellCertificate:
        return self.from_document(read_document(path, CertificateDocument))

    def loads(self, text: str) -> DumbbellCertificate:
        return self.from_document(parse_document(text, CertificateDocument))

    def dumps(self, certificate: DumbbellCertificate) -> str:
        return dump_document(self.to_document(certificate))

    def save(self, certificate: DumbbellCertificate, path: Path) -> Path:
        return write_document(path, self.to_document(certificate))

    def save_digraph(self, d: TransitionDigraph, path: Path) -> Path:
        document = DigraphDocument(
            nodes=[token_document(token) for token in d.nodes],
            arcs=[
                ArcDocument(source=source, target=target, probability=str(probability))
                for source, target, probability in d.arcs
            ],
        )
        return write_document(path, document)

    @staticmethod
    def from_document(document: CertificateDocument) -> DumbbellCertificate:
        """
        Certificate from its DTO; scalars are parsed exactly.

        :param document: DTO.
        :raises ScalarParseError: for malformed scalars.
        :return: certificate.
        """
        first, second, third = (token_from_document(raw) for raw in document.directions)
        return DumbbellCertificate(
            base_edge=document.base_edge,
            t=parse_scalar(document.t),
            directions=(first, second, third),
            paths=tuple(
                CertificatePath(
                    name=raw_path.name,
                    tokens=tuple(token_from_document(raw) for raw in raw_path.tokens),
                    chords=tuple(
                        CertificateChord(
                            face=raw.face,
                            start=(parse_scalar(raw.start[0]), parse_scalar(raw.start[1])),
                            end=(parse_scalar(raw.end[0]), parse_scalar(raw.end[1])),
                            length=parse_scalar(raw.length),
                        )
                        for raw in raw_path.chords
                    ),
                    length=parse_scalar(raw_path.length),
                )
                for raw_path in document.paths
            ),
        )

    @staticmethod
    def to_document(certificate: DumbbellCertificate) -> CertificateDocument:
        return CertificateDocument(
            base_edge=certificate.base_edge,
            t=format_scalar(certificate.t),
            directions=[token_document(token) for token in certificate.directions],
            paths=[
                CertificatePathDocument(
                    name=path.name,
                    tokens=[token_document(token) for token in path.tokens],
                    chords=[
                        ChordDocument(
                            face=chord.face,
                            start=(format_scalar(chord.start[0]), format_scalar(chord.start[1])),
                            end=(format_scalar(chord.end[0]), format_scalar(chord.end[1])),
                            length=format_scalar(chord.length),
                        )
                        for chord in path.chords
                    ],
                    length=format_scalar(path.length),
                )
                for path in certificate.paths
            ],
        )
