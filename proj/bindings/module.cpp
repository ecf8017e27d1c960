// placeholder so the target exists while the core is brought up
#include <pybind11/pybind11.h>
PYBIND11_MODULE(_pdcg, m) { m.doc() = "pdcg"; }
