"""Print H_n(Z/m; Z) for small m via the bar construction over BZ/m."""

import argparse

from hocolim.bar_cobar import hocolim
from hocolim.category_diagram import constant_diagram, cyclic_group_category
from hocolim.chain import ChainComplex
from hocolim.exact_linalg import ZZ
from hocolim.totalization import DegreeWindow


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--top", type=int, default=4)
    args = ap.parse_args()
    w = DegreeWindow(0, args.top)
    print("m  " + "  ".join(f"H_{n}".ljust(6) for n in w))
    for m in args.orders:
        I = cyclic_group_category(m)
        r = hocolim(I, constant_diagram(I, ChainComplex.free(ZZ, 0)), w)
        print(f"{m:<2} " + "  ".join(str(r.homology[n]).ljust(6) for n in w))


if __name__ == "__main__":
    main()
