#include "gamma14/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace gamma14 {

using nlohmann::json;

ShiftedInstance instance_from_json(const json& j) {
    int n = j.at("n").get<int>();
    RatMat gram(n, RatVec(n));
    const auto& g = j.at("gram");
    if (static_cast<int>(g.size()) != n) throw std::runtime_error("form json: gram has wrong row count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g[i].size()) != n)
            throw std::runtime_error("form json: gram row " + std::to_string(i) + " has wrong size");
        for (int jj = 0; jj < n; ++jj) gram[i][jj] = parse_rat(g[i][jj].get<std::string>());
    }
    RatVec shift(n, Rat(0));
    if (j.contains("shift")) {
        const auto& s = j.at("shift");
        if (static_cast<int>(s.size()) != n) throw std::runtime_error("form json: shift has wrong size");
        for (int i = 0; i < n; ++i) shift[i] = parse_rat(s[i].get<std::string>());
    }
    Rat gamma(8);
    if (j.contains("gamma")) gamma = parse_rat(j.at("gamma").get<std::string>());
    return ShiftedInstance(QForm(n, gram), shift, gamma);
}

ShiftedInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open form file: " + path);
    json j;
    in >> j;
    return instance_from_json(j);
}

json instance_to_json(const ShiftedInstance& inst) {
    json g = json::array();
    for (const auto& row : inst.form.gram) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rat_str(e));
        g.push_back(r);
    }
    json s = json::array();
    for (const auto& e : inst.shift) s.push_back(rat_str(e));
    return json{{"n", inst.form.n}, {"gram", g}, {"shift", s}, {"gamma", rat_str(inst.gamma)}};
}

json enclosure_to_json(const Enclosure& e) {
    return json{{"lo", rat_str(e.lo)}, {"hi", rat_str(e.hi)}};
}

json birch_to_json(const BirchForm& bf) {
    json u = json::array();
    for (const auto& row : bf.U) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        u.push_back(r);
    }
    auto phi = json::array();
    for (const auto& row : bf.phi.gram) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rat_str(e));
        phi.push_back(r);
    }
    return json{{"a2", rat_str(bf.a2)},         {"a3", rat_str(bf.a3)},
                {"a4", rat_str(bf.a4)},         {"a5", rat_str(bf.a5)},
                {"a", rat_str(bf.a)},           {"h4", rat_str(bf.h4)},
                {"h5", rat_str(bf.h5)},         {"A", rat_str(bf.A)},
                {"B", rat_str(bf.B)},           {"C", rat_str(bf.C)},
                {"lambda", rat_str(bf.lambda)}, {"t", rat_str(bf.t)},
                {"phi", phi},                   {"transform", u},
                {"scale", rat_str(bf.rho)}};
}

json case_params_to_json(const CaseParams& cp) {
    return json{{"gamma", rat_str(cp.gamma)},
                {"d_pow5", rat_str(cp.d.pow5)},
                {"d", enclosure_to_json(cp.d.enc)},
                {"d_decimal", rat_decimal(cp.d.enc.lo, 10)},
                {"m", cp.m},
                {"K", cp.K},
                {"L", cp.L},
                {"M", cp.M},
                {"delta_m", enclosure_to_json(cp.delta_m)},
                {"delta_mK", enclosure_to_json(cp.delta_mK)},
                {"delta_mKL", enclosure_to_json(cp.delta_mKL)},
                {"delta_star_mM", enclosure_to_json(cp.delta_star_mM)},
                {"a2p", rat_str(cp.a2p)},
                {"a4p", rat_str(cp.a4p)},
                {"a5p", rat_str(cp.a5p)},
                {"a2pp", rat_str(cp.a2pp)},
                {"a5pp", rat_str(cp.a5pp)},
                {"a2ppp", rat_str(cp.a2ppp)},
                {"a2ppp_printed_variant", rat_str(cp.a2ppp_printed)},
                {"a2star", rat_str(cp.a2star)},
                {"a4star", rat_str(cp.a4star)},
                {"C", rat_str(cp.Cval)}};
}

json witness_to_json(const IntVec& x, const Rat& value, bool equality) {
    json xv = json::array();
    for (const auto& e : x) xv.push_back(e.get_str());
    return json{{"x", xv},
                {"value", rat_str(value)},
                {"value_decimal", rat_decimal(value, 10)},
                {"equality", equality}};
}

}  // namespace gamma14
