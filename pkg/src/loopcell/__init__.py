"""Exact computations in the affine Weyl group and loop group of SL_n."""
