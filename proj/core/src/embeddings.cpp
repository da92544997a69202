#include "poset_shell/embeddings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "poset_shell/rank_order.hpp"

namespace posets {

rook psi(const rook& x) {
    const int n = x.size();
    const int k = x.ones();
    if (k != n && k != n - 1)
        throw std::invalid_argument("psi: " + x.str() + " has " + std::to_string(k) +
                                    " nonzero entries, need n or n-1");
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
    for (int j = 1; j <= n; ++j) {
        w[static_cast<std::size_t>(j - 1)] = x.at(j) + 1;
        used[static_cast<std::size_t>(x.at(j) + 1)] = 1;
    }
    for (int v = 1; v <= n + 1; ++v)
        if (!used[static_cast<std::size_t>(v)]) w[static_cast<std::size_t>(n)] = v;
    return rook(std::move(w));
}

partial_involution phi(const partial_involution& x) {
    const int n = x.size();
    const int k = x.ones();
    if (k != n && k != n - 1)
        throw std::invalid_argument("phi: " + x.str() + " has " + std::to_string(k) +
                                    " nonzero entries, need n or n-1");
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = x.at(j);
    if (k == n) {
        w[static_cast<std::size_t>(n)] = n + 1;
    } else {
        std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 1; j <= n; ++j) present[static_cast<std::size_t>(x.at(j))] = 1;
        int missing = 0;
        for (int v = 0; v <= n; ++v)
            if (!present[static_cast<std::size_t>(v)]) missing = v;
        for (int j = 1; j <= n; ++j)
            if (x.at(j) == 0) w[static_cast<std::size_t>(j - 1)] = n + 1;
        w[static_cast<std::size_t>(n)] = missing;
    }
    rook image(std::move(w));
    if (!image.is_permutation() || !image.is_symmetric())
        throw std::logic_error("phi: image " + image.str() + " is not an involution");
    return partial_involution(std::move(image));
}

std::string isomorphism_report::json() const {
    nlohmann::ordered_json j;
    j["bijective"] = bijective;
    j["order_preserving_forward"] = order_preserving_forward;
    j["order_preserving_backward"] = order_preserving_backward;
    if (!witness.empty()) j["witness"] = witness;
    return j.dump();
}

isomorphism_report verify_isomorphism(const std::vector<std::size_t>& image_index,
                                      const finite_poset& domain,
                                      const finite_poset& codomain) {
    isomorphism_report rep;
    if (image_index.size() != domain.size())
        throw std::invalid_argument("verify_isomorphism: map size mismatch");

    std::vector<char> hit(codomain.size(), 0);
    rep.bijective = domain.size() == codomain.size();
    for (std::size_t i = 0; i < image_index.size() && rep.bijective; ++i) {
        const std::size_t im = image_index[i];
        if (im >= codomain.size() || hit[im]) {
            rep.bijective = false;
            rep.witness = "not injective/into at " + domain.label(i);
        } else {
            hit[im] = 1;
        }
    }

    rep.order_preserving_forward = true;
    rep.order_preserving_backward = true;
    for (std::size_t a = 0; a < domain.size(); ++a) {
        for (std::size_t b = 0; b < domain.size(); ++b) {
            if (image_index[a] >= codomain.size() || image_index[b] >= codomain.size())
                continue;
            const bool dom = domain.leq(a, b);
            const bool cod = codomain.leq(image_index[a], image_index[b]);
            if (dom && !cod && rep.order_preserving_forward) {
                rep.order_preserving_forward = false;
                if (rep.witness.empty())
                    rep.witness = domain.label(a) + " <= " + domain.label(b) +
                                  " but images are incomparable";
            }
            if (!dom && cod && rep.order_preserving_backward) {
                rep.order_preserving_backward = false;
                if (rep.witness.empty())
                    rep.witness = "images of " + domain.label(a) + ", " + domain.label(b) +
                                  " are related but the elements are not";
            }
        }
    }
    return rep;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

embedding_check check_psi_embedding(int n) {
    embedding_check chk;
    std::vector<rook> dom_elems = enumerate_rooks(n, n - 1);
    {
        auto full = enumerate_rooks(n, n);
        dom_elems.insert(dom_elems.end(), full.begin(), full.end());
    }
    std::sort(dom_elems.begin(), dom_elems.end());
    std::vector<std::string> labels;
    for (const auto& r : dom_elems) labels.push_back(r.str());
    finite_poset dom = finite_poset::build(labels, [&](std::size_t a, std::size_t b) {
        return leq_rooks(dom_elems[a], dom_elems[b]);
    });

    rook_poset cod = build_sn_bruhat(n + 1);
    std::map<rook, std::size_t> cod_index;
    for (std::size_t i = 0; i < cod.elements.size(); ++i) cod_index[cod.elements[i]] = i;

    std::vector<std::size_t> image;
    for (const auto& r : dom_elems) {
        auto it = cod_index.find(psi(r));
        image.push_back(it == cod_index.end() ? cod.elements.size() : it->second);
    }
    chk.report = verify_isomorphism(image, dom, cod.poset);
    chk.domain_size = static_cast<long long>(dom_elems.size());
    chk.expected_size = factorial(n + 1);
    return chk;
}

embedding_check check_phi_embedding(int n) {
    embedding_check chk;
    std::vector<partial_involution> dom_elems = enumerate_partial_involutions(n, n - 1);
    {
        auto full = enumerate_partial_involutions(n, n);
        dom_elems.insert(dom_elems.end(), full.begin(), full.end());
    }
    std::sort(dom_elems.begin(), dom_elems.end());
    std::vector<std::string> labels;
    for (const auto& r : dom_elems) labels.push_back(r.str());
    finite_poset dom = finite_poset::build(labels, [&](std::size_t a, std::size_t b) {
        return leq_partial_involutions(dom_elems[a], dom_elems[b]);
    });

    pinv_poset cod = build_in_bruhat(n + 1);
    std::map<partial_involution, std::size_t> cod_index;
    for (std::size_t i = 0; i < cod.elements.size(); ++i) cod_index[cod.elements[i]] = i;

    std::vector<std::size_t> image;
    for (const auto& r : dom_elems) {
        auto it = cod_index.find(phi(r));
        image.push_back(it == cod_index.end() ? cod.elements.size() : it->second);
    }
    chk.report = verify_isomorphism(image, dom, cod.poset);
    chk.domain_size = static_cast<long long>(dom_elems.size());
    chk.expected_size = involution_count(n + 1);
    return chk;
}

namespace {

counterexample_triple verify_triple(const std::array<rook, 3>& t,
                                    const std::vector<rook>& ground,
                                    bool use_pinv_order) {
    counterexample_triple out;
    out.elements = t;
    auto leq = [&](const rook& a, const rook& b) {
        if (use_pinv_order)
            return leq_partial_involutions(partial_involution(a), partial_involution(b));
        return leq_rooks(a, b);
    };
    long long members = 0;
    bool all_found = true;
    for (const rook& z : ground) {
        if (leq(t[0], z) && leq(z, t[2])) ++members;
    }
    for (const rook& e : t)
        if (std::find(ground.begin(), ground.end(), e) == ground.end()) all_found = false;
    out.interval_size = members;
    out.interval_is_three =
        all_found && members == 3 && leq(t[0], t[1]) && leq(t[1], t[2]);
    return out;
}

} // namespace

counterexample_triple eulerian_counterexample_rooks(int n, int k) {
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("eulerian_counterexample_rooks: need 1 <= k <= n-2");
    auto make = [&](int ones_before) {
        // 1 placed `ones_before` slots before the tail 2..k, rest zeros.
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        const int tail = k - 1; // entries 2..k occupy the last k-1 slots
        const int one_pos = n - tail - 1 - ones_before;
        w[static_cast<std::size_t>(one_pos)] = 1;
        for (int t = 0; t < tail; ++t)
            w[static_cast<std::size_t>(n - tail + t)] = 2 + t;
        return rook(std::move(w));
    };
    std::array<rook, 3> t{make(0), make(1), make(2)};
    std::vector<rook> ground = enumerate_rooks(n, k);
    return verify_triple(t, ground, false);
}

counterexample_triple eulerian_counterexample_pinv(int n, int k) {
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("eulerian_counterexample_pinv: need 1 <= k <= n-2");
    auto make = [&](int variant) {
        // (1,..,k,0,..,0), then the last 1 steps down the diagonal:
        // (1,..,k-1,0,k+1,0,..,0) and (1,..,k-1,0,0,k+2,0,..,0).
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (int j = 1; j < k; ++j) w[static_cast<std::size_t>(j - 1)] = j;
        const int pos = k + variant;
        w[static_cast<std::size_t>(pos - 1)] = pos;
        return rook(std::move(w));
    };
    std::array<rook, 3> t{make(0), make(1), make(2)};
    std::vector<rook> ground;
    for (const auto& x : enumerate_partial_involutions(n, k)) ground.push_back(x.as_rook());
    return verify_triple(t, ground, true);
}

transported_labeling transport_labeling_to_in1(int n) {
    const embedding_check chk = check_phi_embedding(n);
    if (!chk.report.ok())
        throw std::invalid_argument("transport_labeling: phi is not an isomorphism at n=" +
                                    std::to_string(n));

    transported_labeling out;
    out.target = build_in_bruhat(n + 1);
    std::map<partial_involution, std::size_t> target_index;
    for (std::size_t i = 0; i < out.target.elements.size(); ++i)
        target_index[out.target.elements[i]] = i;

    std::vector<partial_involution> dom = enumerate_partial_involutions(n, n - 1);
    {
        auto full = enumerate_partial_involutions(n, n);
        dom.insert(dom.end(), full.begin(), full.end());
    }
    std::sort(dom.begin(), dom.end());
    std::map<std::size_t, std::size_t> preimage; // target index -> dom position
    for (std::size_t i = 0; i < dom.size(); ++i) preimage[target_index.at(phi(dom[i]))] = i;

    for (std::size_t a = 0; a < out.target.poset.size(); ++a) {
        for (std::size_t b : out.target.poset.upper_covers()[a]) {
            const auto& xa = dom[preimage.at(a)];
            const auto& xb = dom[preimage.at(b)];
            out.labels[{a, b}] = label_cover(xa, xb);
        }
    }
    return out;
}

} // namespace posets
