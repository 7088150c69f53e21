"""
Certificates and tampering
==========================

A decomposition is saved as plain text, one cycle per line.  The verifier
needs nothing else, so a certificate can be checked without trusting the
code that produced it.
"""

import tempfile
from pathlib import Path

from tripartite5 import Params, construct, verify
from tripartite5.certificate import Certificate, dumps, loads, read, write

dec = construct(Params(23, 25, 29)).decomposition()
text = dumps(Certificate.of(dec, "demo"))
print("\n".join(text.splitlines()[:6]))

###############################################################################
# Serialisation is canonical.

print(dumps(loads(text)) == text)

###############################################################################
# Overwrite the last cycle with a copy of the one before it.  Its edges are
# now used twice and the lost cycle's edges not at all.

lines = text.splitlines()
lines[-1] = lines[-2]
out = verify(loads("\n".join(lines) + "\n").decomposition())
print(out.summary())

###############################################################################
# Large outputs can be gzipped; reading detects the compression.

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "k.cert.gz"
    write(Certificate.of(dec, "demo"), path)
    print(path.stat().st_size, len(text), read(path).params)
