"""Plain-text certificates: a small header followed by one cycle per line.

Example::

    # tripartite5 certificate v1
    # params 25 27 33
    # producer tripartite5 0.1.0 construct
    # lengths 3 5
    r25 s1 t25
    ...

Blowup outputs add ``# source 25 27 33`` and ``# factor 5``.  Serialisation is canonical, so
``dumps(loads(text)) == text`` for every text ``dumps`` produced.
"""

from __future__ import annotations

import gzip
from dataclasses import dataclass
from pathlib import Path

from .core import Decomposition, Params, Vertex

MAGIC = "# tripartite5 certificate"
FORMAT_VERSION = 1


class CertificateError(ValueError):
    """Malformed certificate text."""


@dataclass
class Certificate:
    params: Params
    cycles: list
    lengths: tuple = (3, 5)
    producer: str = "tripartite5"
    source: Params | None = None
    factor: int | None = None
    version: int = FORMAT_VERSION

    @classmethod
    def of(cls, dec: Decomposition, producer: str = "tripartite5", lengths=(3, 5),
           source: Params | None = None, factor: int | None = None) -> "Certificate":
        return cls(dec.params, list(dec.cycles), tuple(sorted(lengths)), producer, source, factor)

    def decomposition(self) -> Decomposition:
        return Decomposition(self.params, list(self.cycles))


def dumps(cert: Certificate) -> str:
    p = cert.params
    lines = [
        f"{MAGIC} v{cert.version}",
        f"# params {p.r} {p.s} {p.t}",
        f"# producer {cert.producer}",
        "# lengths " + " ".join(str(n) for n in cert.lengths),
    ]
    if cert.source is not None:
        q = cert.source
        lines.append(f"# source {q.r} {q.s} {q.t}")
    if cert.factor is not None:
        lines.append(f"# factor {cert.factor}")
    lines.extend(" ".join(str(v) for v in cyc) for cyc in cert.cycles)
    return "\n".join(lines) + "\n"


def _ints(text: str, n: int, what: str, lineno: int) -> list[int]:
    parts = text.split()
    if len(parts) != n or not all(x.isdigit() for x in parts):
        raise CertificateError(f"line {lineno}: {what} needs {n} integers")
    return [int(x) for x in parts]


def loads(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(MAGIC + " v"):
        raise CertificateError("line 1: missing certificate header")
    version_text = lines[0][len(MAGIC) + 2:]
    if not version_text.isdigit() or int(version_text) != FORMAT_VERSION:
        raise CertificateError(f"line 1: unsupported format version {version_text!r}")
    fields: dict = {}
    body_start = len(lines)
    for n, line in enumerate(lines[1:], start=2):
        if not line.startswith("# "):
            body_start = n - 1
            break
        key, _, rest = line[2:].partition(" ")
        if key in fields:
            raise CertificateError(f"line {n}: repeated header field {key}")
        if key in ("params", "source"):
            try:
                fields[key] = Params(*_ints(rest, 3, key, n))
            except ValueError as exc:
                raise CertificateError(f"line {n}: {exc}") from None
        elif key == "factor":
            (fields[key],) = _ints(rest, 1, key, n)
        elif key == "lengths":
            fields[key] = tuple(_ints(rest, len(rest.split()), key, n))
        elif key == "producer":
            fields[key] = rest
        else:
            raise CertificateError(f"line {n}: unknown header field {key!r}")
    for required in ("params", "producer", "lengths"):
        if required not in fields:
            raise CertificateError(f"header lacks {required}")
    cycles = []
    for n, line in enumerate(lines[body_start:], start=body_start + 1):
        if not line.strip():
            raise CertificateError(f"line {n}: blank line in body")
        try:
            cycles.append(tuple(Vertex.parse(x) for x in line.split(" ")))
        except ValueError as exc:
            raise CertificateError(f"line {n}: {exc}") from None
    return Certificate(fields["params"], cycles, fields["lengths"], fields["producer"],
                       fields.get("source"), fields.get("factor"))


def write(cert: Certificate, path, compress: bool | None = None) -> None:
    """Write ``cert``; gzip when ``compress`` is set or the path ends in ``.gz``."""
    path = Path(path)
    data = dumps(cert).encode()
    if compress or (compress is None and path.suffix == ".gz"):
        # mtime=0 keeps compressed output byte-identical across runs
        data = gzip.compress(data, mtime=0)
    path.write_bytes(data)


def read(path) -> Certificate:
    data = Path(path).read_bytes()
    if data[:2] == b"\x1f\x8b":
        data = gzip.decompress(data)
    try:
        text = data.decode()
    except UnicodeDecodeError:
        raise CertificateError("certificate is not UTF-8 text") from None
    return loads(text)
