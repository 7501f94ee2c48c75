"""Download bfw62a and pde225 from the NIST Matrix Market into ./data.

Usage: python scripts/fetch_matrices.py [DEST]

The acceptance checks on these matrices look in $WELLSEP_DATA (default
./data) and skip themselves when the files are missing.
"""

import gzip
from pathlib import Path
import sys
import urllib.request

SOURCES = {
    "bfw62a": "https://math.nist.gov/pub/MatrixMarket2/NEP/bfwave/bfw62a.mtx.gz",
    "pde225": "https://math.nist.gov/pub/MatrixMarket2/NEP/matpde/pde225.mtx.gz",
}


def fetch(dest):
    dest.mkdir(parents=True, exist_ok=True)
    for name, url in SOURCES.items():
        target = dest / f"{name}.mtx"
        if target.exists():
            print(f"{target} already present")
            continue
        print(f"fetching {url}")
        with urllib.request.urlopen(url, timeout=60) as resp:
            target.write_bytes(gzip.decompress(resp.read()))
        print(f"wrote {target}")


if __name__ == "__main__":
    fetch(Path(sys.argv[1] if len(sys.argv) > 1 else "data"))
