#pragma once
// OEIS b-file ingestion and comparison of locally supplied b-files against
// internally generated integer sequences.

#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apery.hpp"
#include "cf_engine.hpp"
#include "log1p_family.hpp"
#include "triangles.hpp"

namespace errsum {

struct BFile {
    std::vector<std::pair<long, Int>> entries;  // (index, value), indices strictly increasing
    std::string source_path;
};

inline BFile parse_bfile(const std::string& text, const std::string& source_path = "") {
    BFile bf;
    bf.source_path = source_path;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    bool have_prev = false;
    long prev_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;   // blank
        if (line[start] == '#') continue;           // comment
        std::istringstream ls(line.substr(start));
        long idx;
        std::string valstr, extra;
        if (!(ls >> idx >> valstr) || (ls >> extra))
            throw std::runtime_error("b-file parse error at line " + std::to_string(lineno) +
                                     ": expected 'index value'");
        Int val;
        if (mpz_set_str(val.get_mpz_t(), valstr.c_str(), 10) != 0)
            throw std::runtime_error("b-file parse error at line " + std::to_string(lineno) +
                                     ": bad integer '" + valstr + "'");
        if (have_prev && idx <= prev_index)
            throw std::runtime_error("b-file parse error at line " + std::to_string(lineno) +
                                     ": non-increasing index " + std::to_string(idx));
        prev_index = idx;
        have_prev = true;
        bf.entries.emplace_back(idx, val);
    }
    return bf;
}

inline std::string serialize_bfile(const BFile& bf) {
    std::ostringstream out;
    for (const auto& [i, v] : bf.entries) out << i << ' ' << v.get_str() << '\n';
    return out.str();
}

struct SequenceBinding {
    std::string oeis_id;
    std::string description;
    // first `count` terms of the internal sequence (internal index 0-based)
    std::function<std::vector<Int>(long count)> generator;
    int offset_shift = INT_MIN;  // INT_MIN = unset -> auto-align in {-2..2}
    bool enabled = true;
};

struct OeisReport {
    std::string oeis_id;
    long matched = 0;
    long first_mismatch = -1;  // internal index; -1 if none
    int offset_used = 0;
    bool ok = false;
};

namespace detail {

inline std::vector<Int> e_cf_quotients(long count) {
    // Regular CF of e from a high-precision value; retry with more bits if
    // the trusted expansion is too short.
    for (mpfr_prec_t p = 1024; p <= 1L << 20; p *= 2) {
        CfExpansion exp = regular_cf_expand(const_value("e", p), count);
        if (static_cast<long>(exp.quotients.size()) >= count)
            return std::vector<Int>(exp.quotients.begin(), exp.quotients.begin() + count);
    }
    throw std::runtime_error("e_cf_quotients: precision escalation failed");
}

}  // namespace detail

inline std::vector<SequenceBinding> registered_bindings() {
    std::vector<SequenceBinding> b;
    b.push_back({"A001850", "central Delannoy numbers = B_n(t=1) of the log(1+t) family",
                 [](long count) {
                     std::vector<Int> out;
                     for (long n = 0; n < count; ++n) {
                         Rat B = log1p_seq(Rat(1), n).B;
                         out.push_back(B.get_num());
                     }
                     return out;
                 },
                 INT_MIN, true});
    b.push_back({"A003417", "regular continued fraction partial quotients of e",
                 detail::e_cf_quotients, INT_MIN, true});
    b.push_back({"A005258", "Apery numbers B_n for zeta(2)",
                 [](long count) {
                     std::vector<Int> out;
                     for (long n = 0; n < count; ++n)
                         out.push_back(apery_pair(AperyConstant::zeta2, n).den);
                     return out;
                 },
                 INT_MIN, true});
    b.push_back({"A005259", "Apery numbers D_n for zeta(3)",
                 [](long count) {
                     std::vector<Int> out;
                     for (long n = 0; n < count; ++n)
                         out.push_back(apery_pair(AperyConstant::zeta3, n).den);
                     return out;
                 },
                 INT_MIN, true});
    // Disabled by default: the mapping to d_n = lcm(1..n) is unconfirmed;
    // generated here as the distinct values of lcm(1..n).
    b.push_back({"A051451", "distinct values of lcm(1..n) (unconfirmed binding)",
                 [](long count) {
                     std::vector<Int> out;
                     Int prev = 0;
                     for (unsigned long n = 1; static_cast<long>(out.size()) < count; ++n) {
                         Int l = lcm_upto(n);
                         if (l != prev) out.push_back(l);
                         prev = l;
                         if (n > 100000) throw std::runtime_error("A051451 generator overrun");
                     }
                     return out;
                 },
                 INT_MIN, false});
    b.push_back({"A108626", "diagonal b_{n,n} of the q-polynomial triangle",
                 [](long count) {
                     CoeffTriangle tri = coeff_triangle(TriangleKind::b, count);
                     std::vector<Int> out;
                     for (long n = 0; n < count; ++n) out.push_back(tri.at(n, n));
                     return out;
                 },
                 INT_MIN, true});
    return b;
}

inline const SequenceBinding& find_binding(const std::vector<SequenceBinding>& bindings,
                                           const std::string& id) {
    for (const auto& bd : bindings)
        if (bd.oeis_id == id) return bd;
    throw std::invalid_argument("no registered binding for " + id);
}

// Align internal index i against b-file entry position i + shift; if
// offset_shift is unset, try shifts in {-2..2} and keep the best.
inline OeisReport compare(const SequenceBinding& binding, const BFile& bfile, long count) {
    if (count < 3) throw std::invalid_argument("compare: count >= 3");
    std::vector<Int> gen = binding.generator(count + 2);
    std::vector<int> shifts;
    if (binding.offset_shift == INT_MIN)
        shifts = {0, 1, -1, 2, -2};
    else
        shifts = {binding.offset_shift};

    OeisReport best{binding.oeis_id, 0, -1, 0, false};
    for (int s : shifts) {
        long matched = 0;
        long first_mismatch = -1;
        long compared = 0;
        for (long i = 0; i < count; ++i) {
            long pos = i + s;
            if (pos < 0) continue;
            if (pos >= static_cast<long>(bfile.entries.size())) break;
            ++compared;
            if (bfile.entries[static_cast<std::size_t>(pos)].second ==
                gen[static_cast<std::size_t>(i)]) {
                if (first_mismatch == -1) ++matched;
            } else if (first_mismatch == -1) {
                first_mismatch = i;
            }
        }
        bool ok = (compared >= 3) && (first_mismatch == -1) && matched >= 3;
        if (matched > best.matched || (ok && !best.ok)) {
            best.matched = matched;
            best.first_mismatch = first_mismatch;
            best.offset_used = s;
            best.ok = ok;
        }
    }
    if (best.matched < 3)
        throw std::runtime_error("compare: no offset aligns the first 3 terms for " +
                                 binding.oeis_id);
    return best;
}

}  // namespace errsum
