#include "gamma14/case_tables.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "gamma14/oracle.hpp"

namespace gamma14 {

AffD operator+(const AffD& a, const AffD& b) { return {a.q + b.q, a.r + b.r}; }
AffD operator-(const AffD& a, const AffD& b) { return {a.q - b.q, a.r - b.r}; }
AffD operator-(const AffD& a) { return {-a.q, -a.r}; }

AffD operator*(const AffD& a, const AffD& b) {
    if (a.r != 0 && b.r != 0)
        throw std::invalid_argument("AffD: product of two d-carrying values");
    if (a.r == 0) return {a.q * b.q, a.q * b.r};
    return {b.q * a.q, b.q * a.r};
}

AffD operator/(const AffD& a, const AffD& b) {
    if (b.r != 0 || b.q == 0) throw std::invalid_argument("AffD: divisor must be a nonzero rational");
    return {a.q / b.q, a.r / b.q};
}

Ordering cmp_affd(const AffD& a, const AffD& b, const DRoot& d) {
    // a.q + a.r d ? b.q + b.r d  <=>  (a.q - b.q) ? (b.r - a.r) d
    return cmp_affine_root(a.q - b.q, Rat(0), b.r - a.r, 5, d.pow5);
}

namespace {

// tiny recursive-descent parser over AffD
class AffParser {
  public:
    AffParser(const std::string& s, const TableEnv& env) : s_(s), env_(env) {}

    AffD parse() {
        AffD v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    const std::string& s_;
    const TableEnv& env_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("table expr: " + what + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    AffD expr() {
        AffD v = term();
        while (true) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    AffD term() {
        AffD v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * factor();
            } else if (c == '/') {
                ++pos_;
                v = v / factor();
            } else
                return v;
        }
    }
    AffD factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('(')) {
            AffD v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            return AffD::constant(parse_rat(s_.substr(start, pos_ - start)));
        }
        if (pos_ < s_.size() && isalpha(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "abs") {
                if (!eat('(')) fail("expected '('");
                AffD v = expr();
                if (!eat(')')) fail("expected ')'");
                if (!v.is_rational()) fail("abs of a d-carrying value");
                return AffD::constant(abs_rat(v.q));
            }
            auto it = env_.vars.find(id);
            if (it == env_.vars.end()) fail("unknown name '" + id + "'");
            return it->second;
        }
        fail("unexpected character");
    }
};

}  // namespace

AffD eval_affd(const std::string& expr, const TableEnv& env) {
    return AffParser(expr, env).parse();
}

bool eval_cond(const std::string& cond, const TableEnv& env) {
    // exactly one of <=, >=, <, > splits the string
    size_t pos;
    std::string op;
    if ((pos = cond.find("<=")) != std::string::npos)
        op = "<=";
    else if ((pos = cond.find(">=")) != std::string::npos)
        op = ">=";
    else if ((pos = cond.find('<')) != std::string::npos)
        op = "<";
    else if ((pos = cond.find('>')) != std::string::npos)
        op = ">";
    else
        throw std::invalid_argument("table cond: no comparison in \"" + cond + "\"");
    AffD lhs = eval_affd(cond.substr(0, pos), env);
    AffD rhs = eval_affd(cond.substr(pos + op.size()), env);
    Ordering o = cmp_affd(lhs, rhs, env.d);
    if (op == "<") return o == Ordering::Less;
    if (op == "<=") return o != Ordering::Greater;
    if (op == ">") return o == Ordering::Greater;
    return o != Ordering::Less;
}

std::vector<CaseTable> load_case_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_case_tables: cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<CaseTable> out;
    for (const auto& tj : j.at("tables")) {
        CaseTable t;
        t.id = tj.at("id").get<std::string>();
        t.sampler = tj.at("sampler").get<std::string>();
        t.a2_variant = tj.value("a2_variant", "a2");
        const auto& f = tj.at("form");
        t.p3 = f.value("p3", "0");
        t.p4 = f.value("p4", "0");
        t.p5 = f.value("p5", "0");
        t.k3 = f.value("k3", "0");
        t.k4 = f.value("k4", "0");
        t.k5 = f.value("k5", "0");
        t.lambda = f.value("lambda", "0");
        t.off = f.value("off", "0");
        t.bound = tj.at("bound").get<std::string>();
        t.bound_strict = tj.value("bound_strict", true);
        if (tj.contains("fixed"))
            for (auto& [k, v] : tj.at("fixed").items()) t.fixed[k] = v.get<std::string>();
        for (const auto& rj : tj.at("rows")) {
            CaseRow r;
            for (const auto& c : rj.at("cond")) r.cond.push_back(c.get<std::string>());
            if (rj.contains("assign"))
                for (auto& [k, v] : rj.at("assign").items()) r.assign[k] = v.get<std::string>();
            r.value = rj.value("value", "0");
            r.unrealizable = rj.value("unrealizable", false);
            r.note = rj.value("note", "");
            t.rows.push_back(std::move(r));
        }
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct Draw {
    Rat c1, a2v, a, A, t;
    DRoot d;
};

// feasible (a, d^5) pairs for the m=3, K=2 samplers, enumerated once on a
// fixed grid and shared by every trial (the draw stays deterministic)
const std::vector<std::pair<Rat, Rat>>& feasible_pool(const std::string& sampler, const Rat& t,
                                                      bool l3) {
    static std::map<std::string, std::vector<std::pair<Rat, Rat>>> pools;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = pools.find(sampler);
    if (it != pools.end()) return it->second;
    std::vector<std::pair<Rat, Rat>> pool;
    Rat dlo = l3 ? parse_rat("0.3467") : parse_rat("0.3969");
    Rat dhi = l3 ? parse_rat("0.3555") : parse_rat("0.4266");
    Rat lq = l3 ? Rat(3) : Rat(2);
    for (long i = 0; i <= 160 && pool.size() < 4000; ++i) {
        Rat d = dlo + (dhi - dlo) * Rat(i) / 160;
        Rat d5 = pow_rat(d, 5);
        for (long jj = 0; jj <= 160; ++jj) {
            Rat a = d / 4 + (d / 3 - d / 4) * Rat(jj) / 160;
            Rat A = d5 / (2 * a * t);
            if (!(3 * a < d && d <= 4 * a)) continue;
            if (!(2 * A < d + 2 * a && d + 2 * a <= 3 * A)) continue;
            Rat dmk = d + 2 * a + 3 * A / 4;
            if (!(lq * t < dmk && dmk <= (lq + 1) * t)) continue;
            if (!(a < Rat(1, 2))) continue;
            pool.emplace_back(a, d5);
        }
    }
    if (pool.empty()) throw std::runtime_error("feasible_pool: empty for " + sampler);
    return pools.emplace(sampler, std::move(pool)).first->second;
}

// parameter models for the transcribed tables
Draw sample_params(const std::string& sampler, Rng& rng) {
    Draw dr;
    dr.c1 = rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 64);
    if (dr.c1 == Rat(-1, 2)) dr.c1 = Rat(1, 2);
    dr.a2v = rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 64);
    if (dr.a2v == Rat(-1, 2)) dr.a2v = Rat(1, 2);
    auto set_d5 = [&](const Rat& d5) {
        dr.d.pow5 = d5;
        dr.d.enc = root_enclosure(d5, 5, Rat(1, Int(1) << 48));
    };
    if (sampler == "L12") {
        dr.a = Rat(1, 2);
        dr.A = Rat(1, 2);
        dr.t = Rat(3, 2);
        set_d5(Rat(3, 4));  // t = 2 d^5
        return dr;
    }
    if (sampler == "L14") {
        dr.a = Rat(1, 2);
        dr.A = Rat(1);
        dr.t = Rat(3, 4);
        set_d5(Rat(3, 4));  // t = d^5
        return dr;
    }
    if (sampler == "m3K2L1") {
        dr.a = Rat(1, 8);
        dr.A = Rat(1, 4);
        dr.t = Rat(1, 2);
        set_d5(Rat(1, 32));  // d = 1/2
        return dr;
    }
    if (sampler == "m3K2L3" || sampler == "m3K2L2") {
        bool l3 = sampler == "m3K2L3";
        dr.t = l3 ? Rat(1, 6) : Rat(1, 4);
        const auto& pool = feasible_pool(sampler, dr.t, l3);
        const auto& pick = pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)];
        dr.a = pick.first;
        Rat d5 = pick.second;
        dr.A = d5 / (2 * dr.a * dr.t);
        set_d5(d5);
        return dr;
    }
    throw std::invalid_argument("sample_params: unknown sampler " + sampler);
}

TableEnv make_env(const Draw& dr) {
    TableEnv env;
    env.d = dr.d;
    env.vars["c1"] = AffD::constant(dr.c1);
    env.vars["a2v"] = AffD::constant(dr.a2v);
    env.vars["a"] = AffD::constant(dr.a);
    env.vars["A"] = AffD::constant(dr.A);
    env.vars["t"] = AffD::constant(dr.t);
    env.vars["d"] = AffD(Rat(0), Rat(1));
    env.vars["sgn"] = AffD::constant(dr.c1 >= 0 ? Rat(1) : Rat(-1));
    for (int n = 1; n <= 4; ++n) {
        std::string ns = std::to_string(n);
        env.vars["f" + ns] = AffD::constant(range_quantity(RangeKind::F, n, dr.c1, dr.a2v));
        env.vars["g" + ns] = AffD::constant(range_quantity(RangeKind::G, n, dr.c1, dr.a2v));
        env.vars["p" + ns] = AffD::constant(range_quantity(RangeKind::P, n, dr.c1, dr.a2v));
        env.vars["q" + ns] = AffD::constant(range_quantity(RangeKind::Q, n, dr.c1, dr.a2v));
    }
    return env;
}

Rat eval_rat(const std::string& expr, const TableEnv& env) {
    AffD v = eval_affd(expr, env);
    if (!v.is_rational()) throw std::invalid_argument("expected rational value: " + expr);
    return v.q;
}

std::string describe_draw(const Draw& dr) {
    std::ostringstream os;
    os << "c1=" << rat_str(dr.c1) << " a2v=" << rat_str(dr.a2v) << " a=" << rat_str(dr.a)
       << " A=" << rat_str(dr.A) << " t=" << rat_str(dr.t) << " d^5=" << rat_str(dr.d.pow5);
    return os.str();
}

}  // namespace

TableRunReport verify_case_table(const CaseTable& table, long trials, std::uint64_t seed) {
    TableRunReport rep;
    rep.table_id = table.id;
    rep.row_hits.assign(table.rows.size(), 0);
    for (size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].unrealizable) rep.unrealizable_rows.push_back(i);
    Rng rng(seed ^ std::hash<std::string>{}(table.id));

    for (long trial = 0; trial < trials; ++trial) {
        Draw dr = sample_params(table.sampler, rng);
        TableEnv env = make_env(dr);
        ++rep.trials;

        Rat p3 = eval_rat(table.p3, env), p4 = eval_rat(table.p4, env),
            p5 = eval_rat(table.p5, env);
        Rat k3 = eval_rat(table.k3, env), k4 = eval_rat(table.k4, env),
            k5 = eval_rat(table.k5, env);
        Rat lam = eval_rat(table.lambda, env), off = eval_rat(table.off, env);
        AffD bound = eval_affd(table.bound, env);

        int active = 0;  // realizable rows matching this draw
        for (size_t i = 0; i < table.rows.size(); ++i) {
            const CaseRow& row = table.rows[i];
            bool match = true;
            for (const auto& c : row.cond)
                if (!eval_cond(c, env)) {
                    match = false;
                    break;
                }
            if (!match) continue;
            ++rep.row_hits[i];
            if (row.unrealizable) continue;
            ++active;

            auto coord = [&](const std::string& name) -> Rat {
                auto it = row.assign.find(name);
                if (it != row.assign.end()) return eval_rat(it->second, env);
                auto it2 = table.fixed.find(name);
                if (it2 != table.fixed.end()) return eval_rat(it2->second, env);
                return Rat(0);
            };
            Rat x1 = coord("x1"), x2 = coord("x2"), x3 = coord("x3"), x4 = coord("x4"),
                x5 = coord("x5");
            Rat value = (x1 + dr.a2v * x2 + p3 * x3 + p4 * x4 + p5 * x5) * x2 - k3 * x3 * x3 -
                        k4 * (x4 + lam * x5) * (x4 + lam * x5) - k5 * x5 * x5 - off;
            Rat claimed = eval_rat(row.value, env);
            ++rep.checks;
            auto falsify = [&](const std::string& why) {
                if (rep.falsified.size() < 32)
                    rep.falsified.push_back({table.id, i, why, describe_draw(dr)});
            };
            if (value != claimed) {
                falsify("value " + rat_str(value) + " != claimed " + rat_str(claimed));
                continue;
            }
            if (value <= 0) {
                falsify("value not positive: " + rat_str(value));
                continue;
            }
            Ordering o = cmp_affd(AffD::constant(value), bound, env.d);
            if (o == Ordering::Greater || (table.bound_strict && o == Ordering::Equal))
                falsify("value " + rat_str(value) + " outside the window");
        }
        if (active == 0)
            ++rep.gap_samples;
        else if (active > 1)
            ++rep.overlap_samples;
    }
    return rep;
}

}  // namespace gamma14
