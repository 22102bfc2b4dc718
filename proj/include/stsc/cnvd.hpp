#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsc/stcode.hpp"

namespace stsc {

enum class CnvdMode { OverCodewords, OverDifferences };

std::string cnvd_mode_name(CnvdMode m);
CnvdMode cnvd_mode_parse(std::string_view s);

// Per subset-size statistics of the determinant scan. Values refer to the
// unnormalized matrices. For a square helper submatrix S the reported value
// is |det(S)|; for a non-square (wide) S it is det(S S^H), the real Gram
// determinant.
struct CnvdRow {
    int j = 0;
    std::uint64_t zero_count = 0;
    double min_nonzero_absdet = 0.0;
    bool has_nonzero = false;
    Bits witness_b1;
    Bits witness_b2;
    // Second codeword of the witness pair (over-differences mode only).
    std::optional<Bits> witness2_b1;
    std::optional<Bits> witness2_b2;
};

struct CnvdReport {
    std::string scheme;
    CnvdMode mode = CnvdMode::OverCodewords;
    double normalization = 1.0;
    std::vector<CnvdRow> per_j;
};

// Scan every codeword (or every codeword difference) of the codebook: for
// each j-subset of helper row blocks form the submatrix and classify its
// determinant measure as zero or record it in the nonzero minimum. Codebooks
// carrying exact forms are evaluated exactly in Z[i][theta] (zero means
// exactly zero) and cross-checked against the numeric path; purely numeric
// codebooks use a 1e-9 zero threshold.
CnvdReport cnvd_check(const Codebook& cb, CnvdMode mode);

std::string cnvd_to_json(const CnvdReport& report);

}  // namespace stsc
