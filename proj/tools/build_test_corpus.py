#!/usr/bin/env python3
"""Builds tests/data/real: a small corpus of natural photographs.

Sources are the freely redistributable sample photographs bundled with
scikit-image, scikit-learn and matplotlib. Each source photo is cut into
320x320 crops (converted to RGB first) so the corpus reaches a useful size
while every file stays a genuine camera capture. Output is deterministic.

Usage: python3 tools/build_test_corpus.py [outdir]
"""

import os
import sys

from PIL import Image

CROP = 320
JPEG_QUALITY = 90


def source_images():
    paths = []
    try:
        import skimage
        d = os.path.join(os.path.dirname(skimage.__file__), "data")
        for name in [
            "astronaut.png", "brick.png", "camera.png", "cell.png", "chelsea.png",
            "clock_motion.png", "coffee.png", "coins.png", "grass.png", "gravel.png",
            "hubble_deep_field.jpg", "ihc.png", "moon.png", "motorcycle_left.png",
            "motorcycle_right.png", "page.png", "retina.jpg", "rocket.jpg", "text.png",
        ]:
            p = os.path.join(d, name)
            if os.path.exists(p):
                paths.append(p)
    except ImportError:
        pass
    try:
        import sklearn
        d = os.path.join(os.path.dirname(sklearn.__file__), "datasets", "images")
        for name in ["china.jpg", "flower.jpg"]:
            p = os.path.join(d, name)
            if os.path.exists(p):
                paths.append(p)
    except ImportError:
        pass
    try:
        import matplotlib
        p = os.path.join(os.path.dirname(matplotlib.__file__), "mpl-data", "sample_data",
                         "grace_hopper.jpg")
        if os.path.exists(p):
            paths.append(p)
    except ImportError:
        pass
    return paths


def crops_for(img):
    w, h = img.size
    if min(w, h) < CROP:
        return []
    # Corner-anchored grid plus a centered crop; dedupe by origin.
    origins = {
        (0, 0),
        (w - CROP, 0),
        (0, h - CROP),
        (w - CROP, h - CROP),
        ((w - CROP) // 2, (h - CROP) // 2),
    }
    return [img.crop((x, y, x + CROP, y + CROP)) for x, y in sorted(origins)]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "tests", "data", "real")
    os.makedirs(outdir, exist_ok=True)

    count = 0
    for path in source_images():
        stem = os.path.splitext(os.path.basename(path))[0]
        img = Image.open(path).convert("RGB")
        for i, crop in enumerate(crops_for(img)):
            name = f"{stem}_{i}.jpg"
            crop.save(os.path.join(outdir, name), quality=JPEG_QUALITY)
            count += 1
    print(f"wrote {count} images to {outdir}")
    if count < 50:
        print("warning: fewer than 50 images; rotation checks need at least 50",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
