#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "postdom/model.hpp"
#include "postdom/rational.hpp"

namespace testing_helpers {

inline postdom::Rational R(const char* text) { return postdom::Rational::parse(text); }

inline postdom::RationalVector V(std::initializer_list<const char*> texts) {
    postdom::RationalVector out;
    for (const char* t : texts) {
        out.push_back(R(t));
    }
    return out;
}

inline postdom::Prior P(std::initializer_list<const char*> texts) { return postdom::Prior(V(texts)); }

inline postdom::SignalingStructure K(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<postdom::RationalVector> kernel;
    for (const auto& row : rows) {
        kernel.push_back(V(row));
    }
    return postdom::SignalingStructure::indexed(std::move(kernel));
}

inline postdom::Model M(postdom::Prior prior, postdom::SignalingStructure signals) {
    const std::size_t n = prior.size();
    return {postdom::StateSpace::indexed(n), std::move(prior), std::move(signals)};
}

inline std::vector<bool> mask(const postdom::StateSubset& s) {
    std::vector<bool> out(s.universe_size(), false);
    for (auto i : s.members()) {
        out[i] = true;
    }
    return out;
}

}  // namespace testing_helpers
