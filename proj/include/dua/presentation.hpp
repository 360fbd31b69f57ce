#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dua/errors.hpp"
#include "dua/monomial.hpp"
#include "dua/scalar.hpp"

namespace dua {

using TermMap = std::map<Monomial, Scalar, DeglexLess>;

/// Commutation rule x_j * x_i = coeff * x_i x_j + tail for j > i, with the
/// tail already in normal form and deglex-smaller than x_i x_j.
struct RewriteRule {
    Scalar coeff;
    TermMap tail;
};

/// A solvable-type presentation: ordered generators with one quadratic
/// rewrite rule per out-of-order pair. Immutable once constructed; shared by
/// every polynomial over it, so identity of presentation = pointer identity.
class Presentation {
public:
    Presentation(std::string name, std::vector<std::string> gens, FieldContext ctx,
                 std::map<std::pair<int, int>, RewriteRule> rules)
        : name_(std::move(name)), gens_(std::move(gens)), ctx_(ctx) {
        size_t n = gens_.size();
        rules_.resize(n);
        for (auto& r : rules_) r.resize(n);
        for (auto& [ji, rule] : rules) {
            auto [j, i] = ji;
            if (j <= i || j >= static_cast<int>(n) || i < 0)
                throw PreconditionViolated("rewrite rule must map x_j x_i with j > i");
            if (rule.coeff.is_zero() || !(rule.coeff.context() == ctx_))
                throw PreconditionViolated("rule coefficient must be a nonzero scalar in context");
            Monomial prod(n);
            prod.e[static_cast<size_t>(i)] = 1;
            prod.e[static_cast<size_t>(j)] = 1;
            for (auto& [m, c] : rule.tail) {
                if (m.e.size() != n) throw PreconditionViolated("tail monomial arity mismatch");
                if (!(c.context() == ctx_)) throw FieldMismatch("tail coefficient context");
                if (deglex_cmp(m, prod) >= 0)
                    throw PreconditionViolated("tail must be deglex-smaller than the swapped pair");
            }
            rules_[static_cast<size_t>(j)][static_cast<size_t>(i)] = rule;
            has_rule_[{j, i}] = true;
        }
        for (size_t j = 1; j < n; ++j)
            for (size_t i = 0; i < j; ++i)
                if (!has_rule_.count({static_cast<int>(j), static_cast<int>(i)}))
                    throw PreconditionViolated("missing rewrite rule for generator pair");
    }

    const std::string& name() const { return name_; }
    size_t ngens() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const FieldContext& context() const { return ctx_; }
    const RewriteRule& rule(int j, int i) const {
        return rules_[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }

    int gen_index(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) return static_cast<int>(i);
        return -1;
    }

    // memo for right-multiplication of a normal word by one generator;
    // guarded so shared presentations stay safe across threads
    bool cache_lookup(int gen, const Monomial& m, TermMap& out) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find({gen, m});
        if (it == cache_.end()) return false;
        out = it->second;
        return true;
    }
    void cache_store(int gen, const Monomial& m, const TermMap& val) const {
        std::lock_guard<std::mutex> lk(mu_);
        cache_.emplace(std::make_pair(gen, m), val);
    }

private:
    struct KeyLess {
        bool operator()(const std::pair<int, Monomial>& x, const std::pair<int, Monomial>& y) const {
            if (x.first != y.first) return x.first < y.first;
            if (x.second.e.size() != y.second.e.size()) return x.second.e.size() < y.second.e.size();
            int c = deglex_cmp(x.second, y.second);
            if (c != 0) return c < 0;
            return x.second.e < y.second.e;
        }
    };

    std::string name_;
    std::vector<std::string> gens_;
    FieldContext ctx_;
    std::vector<std::vector<RewriteRule>> rules_;
    std::map<std::pair<int, int>, bool> has_rule_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Monomial>, TermMap, KeyLess> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

} // namespace dua
