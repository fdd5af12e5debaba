"""JSON persistence for decomposition certificates.

The on-disk format is a single human-inspectable JSON object with an explicit
schema version; unknown versions are rejected instead of guessed at.
"""
from __future__ import annotations

import dataclasses
import json

from .errors import CertificateFormatError
from .model import ConnectionSet, DecompositionCertificate, FinitePath

SCHEMA_VERSION = "1"


@dataclasses.dataclass(frozen=True)
class CertificateDocument:
    schema_version: str
    connection_set: tuple[int, ...]
    period: int
    starter_vertices: tuple[int, ...]
    offsets: tuple[int, ...]
    provenance: str = ""

    @classmethod
    def from_certificate(cls, cert: DecompositionCertificate,
                         provenance: str = "") -> "CertificateDocument":
        return cls(
            schema_version=SCHEMA_VERSION,
            connection_set=cert.connection_set.s_plus,
            period=cert.period,
            starter_vertices=cert.starter.vertices,
            offsets=cert.offsets,
            provenance=provenance,
        )

    def to_certificate(self) -> DecompositionCertificate:
        return DecompositionCertificate(
            connection_set=ConnectionSet(self.connection_set),
            period=self.period,
            starter=FinitePath(self.starter_vertices),
            offsets=self.offsets,
        )

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "connection_set": list(self.connection_set),
            "period": self.period,
            "starter_vertices": list(self.starter_vertices),
            "offsets": list(self.offsets),
            "provenance": self.provenance,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CertificateDocument":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"not valid JSON: {exc}") from exc
        if not isinstance(payload, dict):
            raise CertificateFormatError("certificate document must be a JSON object")
        version = payload.get("schema_version")
        if version != SCHEMA_VERSION:
            raise CertificateFormatError(
                f"unknown schema_version {version!r}, expected {SCHEMA_VERSION!r}")
        try:
            connection_set = _int_list(payload["connection_set"])
            period = payload["period"]
            starter = _int_list(payload["starter_vertices"])
            offsets = _int_list(payload["offsets"])
        except KeyError as exc:
            raise CertificateFormatError(f"missing field {exc.args[0]!r}") from exc
        if not isinstance(period, int) or isinstance(period, bool):
            raise CertificateFormatError("period must be an integer")
        provenance = payload.get("provenance", "")
        if not isinstance(provenance, str):
            raise CertificateFormatError("provenance must be a string")
        return cls(
            schema_version=version,
            connection_set=connection_set,
            period=period,
            starter_vertices=starter,
            offsets=offsets,
            provenance=provenance,
        )


def _int_list(value) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise CertificateFormatError(f"expected a list of integers, got {value!r}")
    return tuple(value)


def load_certificate(path: str) -> tuple[CertificateDocument, DecompositionCertificate]:
    """Read a document from disk; format errors raise CertificateFormatError."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CertificateFormatError(f"cannot read {path}: {exc}") from exc
    doc = CertificateDocument.from_json(text)
    return doc, doc.to_certificate()
