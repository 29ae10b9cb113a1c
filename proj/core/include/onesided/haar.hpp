#pragma once

#include <utility>
#include <vector>

#include "onesided/weight.hpp"

namespace onesided {

double inner_product(const std::vector<double>& f, const std::vector<double>& g,
                     const std::vector<double>& lambda);
double norm_sq(const std::vector<double>& f, const std::vector<double>& lambda);

/// lambda-average of f over a span; 0 if the span carries no mass.
double measure_average(const std::vector<double>& f, const std::vector<double>& lambda,
                       CellSpan s);

struct HaarComponent {
    std::vector<double> values;
    bool degenerate = false;  // lambda vanishes on a child: zero map
};

/// Disbalanced Haar projection Delta_I^lambda f: child average minus parent
/// average on each child of I, zero outside I.
HaarComponent haar_project(const std::vector<double>& f, const DyadicInterval& I,
                           const std::vector<double>& lambda);

/// f = f1 + f2 with f1 the lambda-average of f on I0 (constant there) and
/// f2 mean-zero; the two are lambda-orthogonal.
std::pair<std::vector<double>, std::vector<double>> mean_split(
    const std::vector<double>& f, const std::vector<double>& lambda, CellSpan I0);

/// Sum of Delta_J^lambda f over all dyadic J inside S (S included), i.e.
/// the projection onto the Haar span below S.
std::vector<double> project_tree(const std::vector<double>& f, const DyadicInterval& S,
                                 const std::vector<double>& lambda);

}  // namespace onesided
