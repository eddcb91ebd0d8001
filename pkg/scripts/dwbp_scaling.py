"""Compare lattice and product-formula evaluation of domain-wall partition
functions as the system size grows.

The transfer-matrix evaluation walks a 2^M dimensional space while the
factorized form is a product of O(M^2) rational factors, so this also serves
as a quick profile of where the exponential cost bites.

Example:
    python3 scripts/dwbp_scaling.py --max-M 8 --kind II --seed 7
"""

import argparse
import time

from reflectice.scalar import sample_param_point
from reflectice.lattice import dwbp
from reflectice.formulas import dwbp_product


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kind", choices=("I", "II"), default="I")
    parser.add_argument("--max-M", dest="max_M", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    mode = "typeII" if args.kind == "II" else "typeI"
    print("kind %s, seed %d" % (args.kind, args.seed))
    for M in range(1, args.max_M + 1):
        point = sample_param_point(args.seed, M, M, mode=mode)
        t0 = time.time()
        lattice = dwbp(args.kind, point)
        t1 = time.time()
        product = dwbp_product(args.kind, point)
        t2 = time.time()
        digits = len(str(abs(lattice.numerator)))
        status = "exact match" if lattice == product else "MISMATCH"
        print("  M=%d  lattice %.3fs  product %.3fs  ~%d digit numerator  %s"
              % (M, t1 - t0, t2 - t1, digits, status))


if __name__ == "__main__":
    main()
