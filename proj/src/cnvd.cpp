#include "stsc/cnvd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace stsc {

namespace {

constexpr double kZeroThreshold = 1e-9;
constexpr double kCrossCheckTol = 1e-9;

struct Measure {
    double value = 0.0;
    bool zero = false;
};

CMat select_rows(const CMat& m, const std::vector<std::size_t>& rows) {
    CMat out(rows.size(), m.cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = m(rows[r], c);
    return out;
}

// |det(S)| for square S, det(S S^H) for wide S (j <= 2 suffices for the
// two-helper codebooks; a tall S has singular Gram by rank).
double numeric_measure(const CMat& s) {
    const std::size_t j = s.rows;
    const std::size_t t = s.cols;
    if (j == t) {
        if (j == 1) return std::abs(s(0, 0));
        if (j == 2) return std::abs(s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0));
        throw std::invalid_argument("cnvd_check: only up to two helper row blocks supported");
    }
    if (j == 1) {
        double g = 0.0;
        for (std::size_t c = 0; c < t; ++c) g += std::norm(s(0, c));
        return g;
    }
    if (j == 2) {
        std::complex<double> g00 = 0, g01 = 0, g11 = 0;
        for (std::size_t c = 0; c < t; ++c) {
            g00 += s(0, c) * std::conj(s(0, c));
            g01 += s(0, c) * std::conj(s(1, c));
            g11 += s(1, c) * std::conj(s(1, c));
        }
        return std::abs((g00 * g11 - g01 * std::conj(g01)).real());
    }
    throw std::invalid_argument("cnvd_check: only up to two helper row blocks supported");
}

// Exact classification where the ring arithmetic supports it; falls back to
// std::nullopt (numeric threshold) otherwise.
std::optional<Measure> exact_measure(const GMat& full, const std::vector<std::size_t>& rows,
                                     std::size_t t) {
    const std::size_t j = rows.size();
    if (j == t) {
        GoldenElem det;
        if (j == 1) {
            det = full(rows[0], 0);
        } else if (j == 2) {
            det = full(rows[0], 0) * full(rows[1], 1) - full(rows[0], 1) * full(rows[1], 0);
        } else {
            return std::nullopt;
        }
        if (det.is_zero()) return Measure{0.0, true};
        return Measure{std::sqrt(embed_abs2(det).value()), false};
    }
    if (j == 1) {
        EmbedAbs2 gram{};
        bool all_zero = true;
        for (std::size_t c = 0; c < t; ++c) {
            const GoldenElem& e = full(rows[0], c);
            all_zero = all_zero && e.is_zero();
            gram = gram + embed_abs2(e);
        }
        if (all_zero) return Measure{0.0, true};
        return Measure{gram.value(), false};
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> row_subsets(std::size_t k, std::size_t j) {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> pick(j);
    // Lexicographic combinations of {0..k-1}.
    for (std::size_t i = 0; i < j; ++i) pick[i] = i;
    while (true) {
        subsets.push_back(pick);
        std::size_t i = j;
        while (i > 0 && pick[i - 1] == k - j + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t l = i; l < j; ++l) pick[l] = pick[l - 1] + 1;
    }
    return subsets;
}

struct Accum {
    std::uint64_t zero_count = 0;
    bool has_nonzero = false;
    double min_nonzero = std::numeric_limits<double>::infinity();
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;
};

}  // namespace

std::string cnvd_mode_name(CnvdMode m) {
    return m == CnvdMode::OverCodewords ? "over-codewords" : "over-differences";
}

CnvdMode cnvd_mode_parse(std::string_view s) {
    if (s == "over-codewords") return CnvdMode::OverCodewords;
    if (s == "over-differences") return CnvdMode::OverDifferences;
    throw std::invalid_argument("unknown cnvd mode: " + std::string(s));
}

CnvdReport cnvd_check(const Codebook& cb, CnvdMode mode) {
    if (cb.codewords.empty()) throw std::invalid_argument("cnvd_check: empty codebook");

    const std::size_t k = cb.codewords.front().matrix.rows;
    const std::size_t t = cb.codewords.front().matrix.cols;
    bool exact = true;
    for (const auto& cw : cb.codewords) exact = exact && cw.exact_form.has_value();

    // Work on the unnormalized matrices.
    const double unscale = 1.0 / cb.normalization;
    std::vector<CMat> raw(cb.codewords.size());
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) raw[i] = unscale * cb.codewords[i].matrix;

    std::vector<std::vector<std::vector<std::size_t>>> subsets_by_j(k + 1);
    for (std::size_t j = 1; j <= k; ++j) subsets_by_j[j] = row_subsets(k, j);
    std::vector<Accum> acc(k + 1);

    const auto scan_item = [&](const CMat& numeric, const GMat* exact_form, std::size_t ia,
                               std::size_t ib) {
        for (std::size_t j = 1; j <= k; ++j) {
            for (const auto& rows : subsets_by_j[j]) {
                const double numeric_value = numeric_measure(select_rows(numeric, rows));
                Measure m{numeric_value, numeric_value < kZeroThreshold};
                if (exact_form != nullptr) {
                    if (auto em = exact_measure(*exact_form, rows, t)) {
                        if (std::abs(em->value - numeric_value) > kCrossCheckTol)
                            throw std::logic_error("cnvd_check: exact and numeric determinants disagree");
                        m = *em;
                    }
                }
                Accum& a = acc[j];
                if (m.zero) {
                    ++a.zero_count;
                } else if (m.value < a.min_nonzero) {
                    a.min_nonzero = m.value;
                    a.has_nonzero = true;
                    a.witness_a = ia;
                    a.witness_b = ib;
                }
            }
        }
    };

    if (mode == CnvdMode::OverCodewords) {
        for (std::size_t i = 0; i < cb.codewords.size(); ++i)
            scan_item(raw[i], exact ? &*cb.codewords[i].exact_form : nullptr, i, i);
    } else {
        for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
            for (std::size_t l = i + 1; l < cb.codewords.size(); ++l) {
                CMat diff = raw[i];
                for (std::size_t e = 0; e < diff.data.size(); ++e) diff.data[e] -= raw[l].data[e];
                GMat gdiff;
                if (exact) {
                    gdiff = *cb.codewords[i].exact_form;
                    for (std::size_t e = 0; e < gdiff.data.size(); ++e)
                        gdiff.data[e] = gdiff.data[e] - cb.codewords[l].exact_form->data[e];
                }
                scan_item(diff, exact ? &gdiff : nullptr, i, l);
            }
        }
    }

    CnvdReport report;
    report.scheme = cb.scheme.name();
    report.mode = mode;
    report.normalization = cb.normalization;
    for (std::size_t j = 1; j <= k; ++j) {
        CnvdRow row;
        row.j = static_cast<int>(j);
        row.zero_count = acc[j].zero_count;
        row.has_nonzero = acc[j].has_nonzero;
        row.min_nonzero_absdet = acc[j].has_nonzero ? acc[j].min_nonzero : 0.0;
        const auto& wa = cb.codewords[acc[j].witness_a];
        row.witness_b1 = wa.b1;
        row.witness_b2 = wa.b2;
        if (mode == CnvdMode::OverDifferences) {
            const auto& wb = cb.codewords[acc[j].witness_b];
            row.witness2_b1 = wb.b1;
            row.witness2_b2 = wb.b2;
        }
        report.per_j.push_back(std::move(row));
    }
    return report;
}

std::string cnvd_to_json(const CnvdReport& report) {
    nlohmann::ordered_json j;
    j["scheme"] = report.scheme;
    j["mode"] = cnvd_mode_name(report.mode);
    j["normalization"] = report.normalization;
    j["per_j"] = nlohmann::ordered_json::array();
    for (const auto& row : report.per_j) {
        nlohmann::ordered_json r;
        r["j"] = row.j;
        r["zero_count"] = row.zero_count;
        if (row.has_nonzero)
            r["min_nonzero_absdet"] = row.min_nonzero_absdet;
        else
            r["min_nonzero_absdet"] = nullptr;
        r["witness_b1"] = bits_to_string(row.witness_b1);
        r["witness_b2"] = bits_to_string(row.witness_b2);
        if (row.witness2_b1) r["witness2_b1"] = bits_to_string(*row.witness2_b1);
        if (row.witness2_b2) r["witness2_b2"] = bits_to_string(*row.witness2_b2);
        j["per_j"].push_back(std::move(r));
    }
    return j.dump(2);
}

}  // namespace stsc
