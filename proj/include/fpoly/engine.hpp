#pragma once

#include "network.hpp"
#include "rep.hpp"
#include "weyl.hpp"

#include <cstdlib>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fpoly {

enum class Method { Paths, Rep, Both };

inline std::string method_str(Method m) {
    switch (m) {
        case Method::Paths: return "paths";
        case Method::Rep: return "rep";
        case Method::Both: return "both";
    }
    throw std::logic_error("method_str");
}

inline Method method_from_str(const std::string& s) {
    if (s == "paths") return Method::Paths;
    if (s == "rep") return Method::Rep;
    if (s == "both") return Method::Both;
    throw std::invalid_argument("unknown method: " + s);
}

struct FRequest {
    LieType type;
    CoxeterWord c;
    int k{1};
    int m{0};
    Method method{Method::Paths};

    void validate() const {
        type.validate();
        c.validate();
        if (c.rank() != type.rank)
            throw std::invalid_argument("Coxeter word length != rank");
        if (k < 1 || k > type.rank)
            throw std::invalid_argument("fundamental index k out of [1, rank]");
        int h = height(type, c, k);
        if (m < 0 || m > h)
            throw std::invalid_argument("m = " + std::to_string(m) + " outside [0, h] with h = " +
                                        std::to_string(h));
    }
};

struct FResult {
    Polynomial polynomial{0};
    WeightLabel label;
    int h{0};
    int k{0};
    int m{0};
    Method method{Method::Paths};
    std::optional<Polynomial> paths_polynomial;
    std::optional<Polynomial> rep_polynomial;
    std::optional<bool> agreement;
};

namespace detail {

/// Network variant, label kind, and summation rule for (type, k).
struct Dispatch {
    SchemeVariant variant;
    bool spin;  // bundled enumeration + square roots
};

inline Dispatch dispatch_for(const LieType& type, int k) {
    switch (type.family) {
        case Family::A: return {SchemeVariant::AVector, false};
        case Family::B:
            if (k == type.rank) return {SchemeVariant::BSpin, true};
            return {SchemeVariant::BVector, false};
        case Family::C: return {SchemeVariant::CVector, false};
        case Family::D:
            if (k >= type.rank - 1) return {SchemeVariant::DVector, true};
            return {SchemeVariant::DVector, false};
    }
    throw std::logic_error("dispatch_for");
}

}  // namespace detail

/// The network-side computation for one extremal label.
inline Polynomial paths_polynomial(const LieType& type, const CoxeterWord& c,
                                   const WeightLabel& label, int k) {
    detail::Dispatch d = detail::dispatch_for(type, k);
    LayeredNetwork net = build_network(d.variant, type.rank, c);
    return d.spin ? spin_sum(net, label) : signed_sum(net, label);
}

inline FResult f_polynomial(const FRequest& req) {
    req.validate();
    FResult res;
    res.k = req.k;
    res.m = req.m;
    res.method = req.method;
    res.h = height(req.type, req.c, req.k);
    res.label = coxeter_apply(req.type, req.c, fundamental_label(req.type, req.k), req.m);

    if (req.method == Method::Paths || req.method == Method::Both)
        res.paths_polynomial = paths_polynomial(req.type, req.c, res.label, req.k);
    if (req.method == Method::Rep || req.method == Method::Both)
        res.rep_polynomial = principal_minor(req.type, req.c, res.label);

    if (req.method == Method::Both) {
        res.agreement = (*res.paths_polynomial == *res.rep_polynomial);
        if (!*res.agreement) {
            std::ostringstream os;
            os << "method disagreement for k=" << req.k << " m=" << req.m
               << " label=" << res.label.str() << "\n  paths: " << res.paths_polynomial->str()
               << "\n  rep:   " << res.rep_polynomial->str();
            throw std::runtime_error(os.str());
        }
    }
    res.polynomial =
        req.method == Method::Rep ? *res.rep_polynomial : *res.paths_polynomial;
    return res;
}

inline int thread_budget() {
    if (const char* env = std::getenv("FPOLY_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// All F-polynomials for (type, c): every k in [1,n], every m in [0, h(k;c)].
/// Cells are independent; they are computed on up to FPOLY_THREADS workers
/// and returned sorted by (k, m).
inline std::vector<FResult> f_table(const LieType& type, const CoxeterWord& c,
                                    Method method = Method::Paths) {
    type.validate();
    c.validate();
    if (c.rank() != type.rank) throw std::invalid_argument("Coxeter word length != rank");

    std::vector<FRequest> cells;
    for (int k = 1; k <= type.rank; ++k) {
        int h = height(type, c, k);
        for (int m = 0; m <= h; ++m) cells.push_back({type, c, k, m, method});
    }

    std::vector<FResult> results(cells.size());
    int workers = std::min<int>(thread_budget(), static_cast<int>(cells.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) results[i] = f_polynomial(cells[i]);
        return results;
    }

    std::mutex mu;
    size_t next = 0;
    std::exception_ptr error;
    auto work = [&]() {
        for (;;) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (error || next >= cells.size()) return;
                i = next++;
            }
            try {
                results[i] = f_polynomial(cells[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

struct CheckFailure {
    int k;
    int m;
    std::string check;
    std::string detail;
};

struct CrosscheckReport {
    int cells{0};
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }

    std::string str() const {
        std::ostringstream os;
        if (ok()) {
            os << "all (k,m) agree: " << cells << " cells checked";
        } else {
            os << failures.size() << " failure(s) over " << cells << " cells; first: k="
               << failures.front().k << " m=" << failures.front().m << " ["
               << failures.front().check << "] " << failures.front().detail;
        }
        return os.str();
    }
};

/// Run both pipelines over the full (k,m) range and verify: equality,
/// integrality, constant term 1, strictly positive coefficients, the
/// zero-crossing claim for type D wedge labels (k <= n-2) and all type B
/// vector labels, and the perfect-square rule in spin cases (a violation
/// there surfaces as an enumeration error).
inline CrosscheckReport crosscheck(const LieType& type, const CoxeterWord& c) {
    CrosscheckReport report;
    for (int k = 1; k <= type.rank; ++k) {
        int h = height(type, c, k);
        for (int m = 0; m <= h; ++m) {
            ++report.cells;
            auto fail = [&](const std::string& check, const std::string& detail) {
                report.failures.push_back({k, m, check, detail});
            };
            FResult res;
            try {
                res = f_polynomial({type, c, k, m, Method::Both});
            } catch (const std::exception& e) {
                fail("computation", e.what());
                continue;
            }
            if (*res.paths_polynomial != *res.rep_polynomial)
                fail("equality", "paths: " + res.paths_polynomial->str() +
                                     " | rep: " + res.rep_polynomial->str());
            const Polynomial& p = res.polynomial;
            if (!p.is_integer()) fail("integrality", p.str());
            if (!(p.constant_term() == Sqrt2::one())) fail("constant-term", p.str());
            for (const auto& [mono, coeff] : p.terms())
                if (coeff.b != 0 || coeff.a < 1) {
                    fail("positivity", p.str());
                    break;
                }
            detail::Dispatch d = detail::dispatch_for(type, k);
            bool no_crossing_claim =
                (type.family == Family::D && k <= type.rank - 2) ||
                (type.family == Family::B && k < type.rank);
            if (no_crossing_claim) {
                LayeredNetwork net = build_network(d.variant, type.rank, c);
                for (const auto& fam : enumerate_families(net, res.label, false))
                    if (fam.crossings != 0) {
                        fail("zero-crossing", "family with " +
                                                  std::to_string(fam.crossings) + " crossings");
                        break;
                    }
            }
        }
    }
    return report;
}

}  // namespace fpoly
