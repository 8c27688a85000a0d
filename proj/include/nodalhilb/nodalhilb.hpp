#ifndef NODALHILB_NODALHILB_HPP
#define NODALHILB_NODALHILB_HPP

#include <nodalhilb/curve_classes.hpp>
#include <nodalhilb/errors.hpp>
#include <nodalhilb/graded_rep.hpp>
#include <nodalhilb/monodromy.hpp>
#include <nodalhilb/qseries.hpp>
#include <nodalhilb/sparse_matrix.hpp>
#include <nodalhilb/verifier.hpp>
#include <nodalhilb/weight_poly.hpp>

#endif
