#include "polytrope/weight_matrix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace polytrope {

std::pair<int, int> edge_at(int n, int index) {
    int i = index / (n - 1);
    int r = index % (n - 1);
    int j = r < i ? r : r + 1;
    return {i, j};
}

WeightMatrix::WeightMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {
    if (n < kMinNodes || n > kMaxNodes)
        throw std::invalid_argument("node count out of range [2,8]: " + std::to_string(n));
}

WeightMatrix::WeightMatrix(int n, std::vector<Rational> row_major) : WeightMatrix(n) {
    if (row_major.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("row-major size mismatch");
    a_ = std::move(row_major);
    for (int i = 0; i < n_; ++i)
        if (a_[i * n_ + i] != 0) throw std::invalid_argument("nonzero diagonal entry");
}

void WeightMatrix::set(int i, int j, Rational v) {
    if (i == j && v != 0) throw std::invalid_argument("diagonal entries must stay zero");
    a_[i * n_ + j] = std::move(v);
}

EdgeVector WeightMatrix::to_edge_vector() const {
    EdgeVector v(edge_count(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) v[edge_index(n_, i, j)] = at(i, j);
    return v;
}

WeightMatrix WeightMatrix::from_edge_vector(int n, const EdgeVector& v) {
    WeightMatrix m(n);
    if (v.size() != static_cast<std::size_t>(edge_count(n)))
        throw std::invalid_argument("edge vector size mismatch");
    for (int e = 0; e < edge_count(n); ++e) {
        auto [i, j] = edge_at(n, e);
        m.set(i, j, v[e]);
    }
    return m;
}

WeightMatrix WeightMatrix::shifted(const Rational& t) const {
    WeightMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) m.set(i, j, at(i, j) - t);
    return m;
}

WeightMatrix WeightMatrix::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad weight-matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries") || !j["n"].is_number_integer())
        throw ParseError("weight-matrix JSON needs integer 'n' and 'entries'");
    const int n = j["n"].get<int>();
    if (n < kMinNodes || n > kMaxNodes) throw ParseError("n out of range [2,8]");
    const auto& rows = j["entries"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw ParseError("'entries' must be an n x n array of rational strings");
    WeightMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("'entries' must be an n x n array of rational strings");
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_string()) throw ParseError("matrix entries must be rational strings");
            Rational v = parse_rational(row[k].get<std::string>());
            if (i == k && v != 0) throw ParseError("diagonal entries must be \"0\"");
            if (i != k) m.set(i, k, std::move(v));
        }
    }
    return m;
}

std::string WeightMatrix::to_json_text() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n_; ++j) row.push_back(format_rational(at(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"n", n_}, {"entries", std::move(rows)}};
    return j.dump();
}

WeightMatrix all_ones_matrix(int n) {
    WeightMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, Rational(1));
    return m;
}

} // namespace polytrope
