#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gamma14/reduction.hpp"

namespace gamma14 {

// Value of the form q + r*d where d is the positive fifth root of a known
// rational; all table ranges and bounds are affine in d, so comparisons are
// decided exactly by powering.
struct AffD {
    Rat q, r;

    AffD() : q(0), r(0) {}
    AffD(Rat qq, Rat rr) : q(std::move(qq)), r(std::move(rr)) {}
    static AffD constant(const Rat& v) { return AffD(v, Rat(0)); }
    bool is_rational() const { return r == 0; }
};

AffD operator+(const AffD& a, const AffD& b);
AffD operator-(const AffD& a, const AffD& b);
AffD operator-(const AffD& a);
AffD operator*(const AffD& a, const AffD& b);  // at most one side may carry d
AffD operator/(const AffD& a, const AffD& b);  // divisor must be rational

// exact ordering of (a - b) against 0, powering through d
Ordering cmp_affd(const AffD& a, const AffD& b, const DRoot& d);

// Environment for the little expression language used in the table files:
// variables are rational (or affine-in-d) values; f1..f4, g.., p.., q..
// expand to the range quantities bound to the table's a2-variant.
struct TableEnv {
    std::map<std::string, AffD> vars;
    DRoot d;
};

// expression over +,-,*,/, rationals, names; "1/4 < f1" style comparisons
AffD eval_affd(const std::string& expr, const TableEnv& env);
bool eval_cond(const std::string& cond, const TableEnv& env);

// ---- transcribed solution tables -------------------------------------------

struct CaseRow {
    std::vector<std::string> cond;
    std::map<std::string, std::string> assign;  // x1, x2, x3, x4, x5 (subset)
    std::string value;                          // claimed closed form
    bool unrealizable = false;                  // printed columns admit no integer point
    std::string note;
};

struct CaseTable {
    std::string id;
    std::string sampler;     // parameter model id
    std::string a2_variant;  // label only; the sampled a2v plays this role
    // stage form: (x1 + a2v x2 + p3 x3 + p4 x4 + p5 x5) x2
    //             - k3 x3^2 - k4 (x4 + lambda x5)^2 - k5 x5^2 - off
    std::string p3, p4, p5, k3, k4, k5, lambda, off;
    std::string bound;  // upper bound expression (affine in d); lower bound is 0
    bool bound_strict = true;
    std::map<std::string, std::string> fixed;  // pinned coordinates
    std::vector<CaseRow> rows;
};

std::vector<CaseTable> load_case_tables(const std::string& path);

struct RowFalsified {
    std::string table_id;
    size_t row_index;
    std::string reason;
    std::string params;  // rational parameter values for reproduction
};

struct TableRunReport {
    std::string table_id;
    long trials = 0;
    long checks = 0;           // (row, draw) pairs actually verified
    long gap_samples = 0;      // draws where no realizable row matched
    long overlap_samples = 0;  // draws where several rows matched
    std::vector<RowFalsified> falsified;
    std::vector<size_t> unrealizable_rows;
    std::vector<long> row_hits;
};

// Draw `trials` exact rational parameter settings from the table's sampler,
// evaluate every active row, and confirm the claimed value and the window
// membership exactly.  Deterministic for a fixed seed.
TableRunReport verify_case_table(const CaseTable& table, long trials, std::uint64_t seed);

}  // namespace gamma14
