#!/usr/bin/env python3
"""Regenerates the bundled 50x40 maze (ASCII and binary PGM)."""
import sys
from pathlib import Path

W, H = 50, 40


def build():
    g = [['.'] * W for _ in range(H)]

    def wall(x0, y0, x1, y1):
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                g[y][x] = '#'

    def door(x0, y0, x1, y1):
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                g[y][x] = '.'

    wall(0, 0, W - 1, 0)
    wall(0, H - 1, W - 1, H - 1)
    wall(0, 0, 0, H - 1)
    wall(W - 1, 0, W - 1, H - 1)

    # left column of rooms
    wall(16, 0, 16, H - 1)
    door(16, 8, 16, 10)
    door(16, 18, 16, 20)
    door(16, 28, 16, 30)
    wall(0, 13, 16, 13)
    door(6, 13, 8, 13)
    wall(0, 26, 16, 26)
    door(10, 26, 12, 26)

    # right column of rooms
    wall(33, 0, 33, H - 1)
    door(33, 18, 33, 20)
    door(33, 33, 33, 35)
    wall(33, 20, W - 1, 20)
    door(40, 20, 42, 20)
    wall(41, 1, 41, 8)

    # central hall
    wall(22, 20, 24, 22)
    wall(17, 30, 28, 30)
    door(24, 30, 26, 30)
    wall(20, 6, 29, 6)
    return g


def main(out_dir):
    g = build()
    out = Path(out_dir)
    (out / 'maze_50x40.txt').write_text(''.join(''.join(r) + '\n' for r in g))
    pix = bytes(0 if c == '#' else 255 for r in g for c in r)
    (out / 'maze_50x40.pgm').write_bytes(b'P5\n%d %d\n255\n' % (W, H) + pix)


if __name__ == '__main__':
    main(sys.argv[1] if len(sys.argv) > 1 else 'data')
