/*
   Copyright 2026 The bax Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bax/relation.hpp"

#include <deque>

namespace bax {
namespace {

/// c with x = c y, for nonzero x, y.
std::optional<Scalar> ratio(const ParamScalar& x, const ParamScalar& y) {
    if (x.terms().size() != y.terms().size()) return std::nullopt;
    const auto& [e, cy] = *y.terms().begin();
    const Scalar c = x.coefficient(e) / cy;
    if (c.is_zero() || !(y * c == x)) return std::nullopt;
    return c;
}

std::string at(std::size_t r, std::size_t c) {
    return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

RelationSearch find_diagonal_relation(const ParamMatrix& a, const ParamMatrix& b) {
    RelationSearch out;
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n) {
        out.reason = "shape mismatch";
        return out;
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (a.row(r).size() != b.row(r).size()) {
            out.reason = "support differs in row " + std::to_string(r + 1);
            return out;
        }
        for (const auto& [c, v] : a.row(r))
            if (b.at(r, c).is_zero()) {
                out.reason = "support differs at " + at(r, c);
                return out;
            }
    }
    const ParamScalar a11 = a.at(0, 0);
    const ParamScalar b11 = b.at(0, 0);
    if (a11.is_zero()) {
        out.reason = "(1,1) entry is zero";
        return out;
    }
    const auto lambda = ratio(a11, b11);
    if (!lambda) {
        out.reason = "(1,1) entries are not proportional";
        return out;
    }

    // g_i / g_j = a_ij / (lambda b_ij) along the undirected support graph
    std::vector<std::optional<Scalar>> g(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (g[root]) continue;
        g[root] = Scalar(1);
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || g[j]) continue;
                if (!a.at(i, j).is_zero()) {
                    const auto rho = ratio(a.at(i, j), b.at(i, j) * *lambda);
                    if (!rho) {
                        out.reason = "entries at " + at(i, j) + " are not proportional";
                        return out;
                    }
                    g[j] = *g[i] / *rho;  // g_i / g_j = rho
                } else if (!a.at(j, i).is_zero()) {
                    const auto rho = ratio(a.at(j, i), b.at(j, i) * *lambda);
                    if (!rho) {
                        out.reason = "entries at " + at(j, i) + " are not proportional";
                        return out;
                    }
                    g[j] = *g[i] * *rho;  // g_j / g_i = rho
                } else {
                    continue;
                }
                queue.push_back(j);
            }
        }
    }

    DiagonalRelation rel{*lambda, {}};
    for (const auto& v : g) rel.g.push_back(*v);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const ParamScalar expected = b.at(r, c) * (rel.lambda * rel.g[r] / rel.g[c]);
            if (!(a.at(r, c) == expected)) {
                out.reason = "verification failed at " + at(r, c);
                return out;
            }
        }
    out.relation = std::move(rel);
    return out;
}

}  // namespace bax
