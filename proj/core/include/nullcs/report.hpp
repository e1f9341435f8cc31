#pragma once

// Regenerates the published PAPR, code-rate and minimum-distance tables as CSV.
//
//   1 - set PAPR of the concatenated CS, q=2, m=7, identity pi, b=1, v=1..5
//   2 - the same family at v=1 for b=0..4
//   3 - R(C2) for q=2 over b=0..6 and (m, v) with 3 <= m <= 6, 1 <= v < m-1
//   4 - R(C2) for v=1 over q in {2,4,6,8,10} and (m, b) pairs
//   6 - code rate and brute-force d_min of binary C3 for b in {0,1,2}, m <= 6

#include "nullcs/construct.hpp"
#include "nullcs/papr.hpp"

#include <string>
#include <vector>

namespace nullcs {

struct PaprTableRow {
    int v = 0;
    std::size_t b = 0;
    std::size_t length = 0;
    double set_papr = 0.0;
};

/// Concatenated CS for q=2, m=7, identity pi and zero coefficients.
ComplementarySet published_papr_family(int v, std::size_t b);

std::vector<PaprTableRow> papr_table_rows(int which, const PaprConfig& cfg = {});

/// CSV text for table 1, 2, 3, 4 or 6; InputError for any other id.
std::string report_table(int which);

}  // namespace nullcs
