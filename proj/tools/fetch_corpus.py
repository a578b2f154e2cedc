#!/usr/bin/env python3
"""Fetch standard 512x512 test images into a corpus directory as binary PPM.

The images are not redistributed here; they are pulled from source
distributions on PyPI that happen to bundle them:

    lena    scikit-image 0.11.3   skimage/data/lena.png
    baboon  opencv-python 4.9.0.80  samples/data/baboon.jpg

Peppers is not available from a package index; drop your own
peppers.ppm (512x512 RGB) into the same directory.

Usage: fetch_corpus.py OUT_DIR [--index URL]
"""

import argparse
import html
import io
import os
import re
import sys
import tarfile
import urllib.request
from urllib.parse import urljoin
from pathlib import Path

from PIL import Image

SOURCES = {
    "lena": ("scikit-image", "0.11.3", "skimage/data/lena.png"),
    "baboon": ("opencv-python", "4.9.0.80", "samples/data/baboon.jpg"),
}


def sdist_url(index: str, project: str, version: str) -> str:
    """Find the sdist link on a PEP 503 simple index page."""
    page_url = f"{index.rstrip('/')}/{project}/"
    with urllib.request.urlopen(page_url) as r:
        page = r.read().decode()
    names = {project, project.replace("-", "_")}
    for href in re.findall(r'href="([^"]+)"', page):
        filename = html.unescape(href).split("#")[0].rsplit("/", 1)[-1]
        if any(filename == f"{n}-{version}.tar.gz" for n in names):
            return urljoin(page_url, html.unescape(href))
    raise RuntimeError(f"no sdist for {project} {version} at {page_url}")


def extract(url: str, member_suffix: str) -> bytes:
    with urllib.request.urlopen(url) as r:
        data = r.read()
    with tarfile.open(fileobj=io.BytesIO(data)) as tar:
        for m in tar.getmembers():
            if m.name.endswith(member_suffix):
                return tar.extractfile(m).read()
    raise RuntimeError(f"{member_suffix} not found in {url}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("out_dir", type=Path)
    ap.add_argument("--index", default=os.environ.get("PIP_INDEX_URL", "https://pypi.org/simple"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, (project, version, member) in SOURCES.items():
        dest = args.out_dir / f"{name}.ppm"
        if dest.exists():
            print(f"{dest}: already present")
            continue
        raw = extract(sdist_url(args.index, project, version), member)
        img = Image.open(io.BytesIO(raw)).convert("RGB")
        if img.size != (512, 512):
            print(f"warning: {name} is {img.size}, expected 512x512", file=sys.stderr)
        img.save(dest, format="PPM")
        print(f"{dest}: {project} {version}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
