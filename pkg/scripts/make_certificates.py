"""Write graph6 certificates and DOT drawings for Pi and Xi.

Usage:
    python scripts/make_certificates.py [--out certificates]

Writes, for the icosahedron (and the dodecahedron where it makes sense):
  pi_<solid>.g6, xi_icosahedron.g6       the graphs as built (deterministic ids)
  canonical_<name>.g6                    canonical forms
  pi_icosahedron.dot, xi_icosahedron.dot drawings, chords highlighted
"""

from __future__ import annotations

import argparse
from pathlib import Path

from icosaut.canon import canonical_form
from icosaut.cli import build_graph
from icosaut.graph import dot_export
from icosaut.graph6 import encode


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="certificates")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    graphs = {
        "pi_icosahedron": build_graph("pi", "icosahedron"),
        "pi_dodecahedron": build_graph("pi", "dodecahedron"),
        "xi_icosahedron": build_graph("xi", "icosahedron"),
    }
    for name, G in graphs.items():
        (out / f"{name}.g6").write_bytes(encode(G) + b"\n")
        (out / f"canonical_{name}.g6").write_bytes(canonical_form(G).graph6 + b"\n")
        print(f"{name}: n={G.n} m={G.m} canonical={canonical_form(G)}")
    for name in ("pi_icosahedron", "xi_icosahedron"):
        (out / f"{name}.dot").write_text(dot_export(graphs[name], name=name.split("_")[0]))


if __name__ == "__main__":
    main()
