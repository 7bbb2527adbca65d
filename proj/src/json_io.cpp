#include "dlp/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dlp {

namespace {

json ratmat_to_json(const RatMat& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat ratmat_from_json(const json& j, int m, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != m)
        throw std::runtime_error("PolyMat JSON: coefficient matrix has wrong row count");
    RatMat a(m, n);
    for (int i = 0; i < m; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::runtime_error("PolyMat JSON: coefficient matrix has wrong column count");
        for (int c = 0; c < n; ++c)
            a.at(i, c) = Rat::from_string(row.at(static_cast<size_t>(c)).get<std::string>());
    }
    return a;
}

std::vector<int> ints_from_json(const json& j) {
    std::vector<int> out;
    for (const auto& e : j) out.push_back(e.get<int>());
    return out;
}

}  // namespace

json polymat_to_json(const PolyMat& P) {
    json coeffs = json::array();
    for (int t = 0; t <= P.grade(); ++t) coeffs.push_back(ratmat_to_json(P.coeff(t)));
    return json{{"m", P.rows()}, {"n", P.cols()}, {"grade", P.grade()}, {"coeffs", coeffs}};
}

PolyMat polymat_from_json(const json& j) {
    try {
        int m = j.at("m").get<int>();
        int n = j.at("n").get<int>();
        int grade = j.at("grade").get<int>();
        const json& coeffs = j.at("coeffs");
        if (m < 1 || n < 1 || grade < 0)
            throw std::runtime_error("PolyMat JSON: nonpositive dimensions or negative grade");
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != grade + 1)
            throw std::runtime_error("PolyMat JSON: need grade+1 coefficient matrices");
        std::vector<RatMat> cs;
        for (int t = 0; t <= grade; ++t)
            cs.push_back(ratmat_from_json(coeffs.at(static_cast<size_t>(t)), m, n));
        return PolyMat(std::move(cs));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("PolyMat JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("PolyMat JSON: ") + e.what());
    }
}

json eigenstructure_to_json(const Eigenstructure& E) {
    json finite = json::object();
    for (const auto& [lambda, mults] : E.finite_eigs) finite[lambda.str()] = mults;
    return json{{"finite", finite},
                {"inf", E.inf_mults},
                {"right", E.right_minimal_indices},
                {"left", E.left_minimal_indices},
                {"rank", E.rank},
                {"grade", E.grade},
                {"irrational_warning", E.irrational_warning}};
}

Eigenstructure eigenstructure_from_json(const json& j) {
    Eigenstructure E;
    for (const auto& [key, val] : j.at("finite").items())
        E.finite_eigs[Rat::from_string(key)] = ints_from_json(val);
    E.inf_mults = ints_from_json(j.at("inf"));
    E.right_minimal_indices = ints_from_json(j.at("right"));
    E.left_minimal_indices = ints_from_json(j.at("left"));
    E.rank = j.at("rank").get<int>();
    E.grade = j.at("grade").get<int>();
    E.irrational_warning = j.value("irrational_warning", false);
    return E;
}

json kronecker_spec_to_json(const KroneckerSpec& s) {
    json finite = json::object();
    for (const auto& [lambda, mults] : s.finite_eigs) finite[lambda.str()] = mults;
    return json{{"m", s.m},
                {"n", s.n},
                {"k", s.k},
                {"rank", s.rank},
                {"finite_eigs", finite},
                {"inf_mults", s.inf_mults},
                {"right_indices", s.right_indices},
                {"left_indices", s.left_indices},
                {"seed", s.seed}};
}

KroneckerSpec kronecker_spec_from_json(const json& j) {
    KroneckerSpec s;
    try {
        s.m = j.at("m").get<int>();
        s.n = j.at("n").get<int>();
        s.k = j.at("k").get<int>();
        s.rank = j.at("rank").get<int>();
        for (const auto& [key, val] : j.at("finite_eigs").items())
            s.finite_eigs[Rat::from_string(key)] = ints_from_json(val);
        s.inf_mults = ints_from_json(j.at("inf_mults"));
        s.right_indices = ints_from_json(j.at("right_indices"));
        s.left_indices = ints_from_json(j.at("left_indices"));
        s.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("KroneckerSpec JSON: ") + e.what());
    }
    s.validate();
    return s;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

PolyMat load_polymat(const std::string& path) { return polymat_from_json(load_json_file(path)); }

}  // namespace dlp
