#include <algorithm>
#include <map>

#include "hyperlat/errors.hpp"
#include "hyperlat/surface.hpp"

namespace hyperlat {

namespace {

// Faces are fixed as consecutive blocks of darts (phi rotates within a block);
// the search glues darts in pairs to build alpha. The smallest unglued dart of
// the already reached faces is glued next, and an unreached face can only be
// entered through its first dart, which removes face relabelling and rotation
// symmetry while still reaching every connected map. sigma = alpha o phi is
// tracked as partial chains so vertex degrees can be pruned against the profile.
class Gluer {
public:
    Gluer(int face_size, int face_count, const std::map<int, int>& profile)
        : s_(face_size), f_(face_count), n_(face_size * face_count), alpha_(n_, -1), succ_(n_, -1), pred_(n_, -1)
    {
        for (const auto& [deg, cnt] : profile) {
            if (deg <= 0) throw DomainError("vertex degrees must be positive");
            if (deg >= static_cast<int>(remaining_.size())) remaining_.resize(deg + 1, 0);
            remaining_[deg] += cnt;
        }
    }

    std::map<std::string, CombinatorialMap> run()
    {
        search(1);
        return std::move(found_);
    }

private:
    Dart phi(Dart d) const { return (d % s_ == s_ - 1) ? d - (s_ - 1) : d + 1; }
    Dart phi_inv(Dart d) const { return (d % s_ == 0) ? d + (s_ - 1) : d - 1; }

    int max_remaining_degree() const
    {
        for (int deg = static_cast<int>(remaining_.size()) - 1; deg > 0; --deg)
            if (remaining_[deg] > 0) return deg;
        return 0;
    }

    // Adds the sigma link from -> to and checks the chain through it.
    // Returns false (leaving the link in place for undo) if the profile is violated.
    bool link(Dart from, Dart to, std::vector<int>& closed)
    {
        succ_[from] = to;
        pred_[to] = from;
        int len = 1;
        Dart d = to;
        while (succ_[d] >= 0 && succ_[d] != to) {
            d = succ_[d];
            ++len;
        }
        if (succ_[d] == to) {
            if (len >= static_cast<int>(remaining_.size()) || remaining_[len] == 0) return false;
            --remaining_[len];
            closed.push_back(len);
            return true;
        }
        for (Dart b = to; pred_[b] >= 0; b = pred_[b]) ++len;
        return len <= max_remaining_degree();
    }

    void glue(Dart a, Dart b, int active)
    {
        alpha_[a] = b;
        alpha_[b] = a;
        std::vector<int> closed;
        const Dart x1 = phi_inv(a), x2 = phi_inv(b);
        // sigma(x) = alpha(phi(x)): phi(x1) = a is now glued to b, and vice versa.
        bool ok = link(x1, b, closed);
        bool second = false;
        if (ok) {
            second = true;
            ok = link(x2, a, closed);
        }
        if (ok) search(active);
        if (second) {
            succ_[x2] = -1;
            pred_[a] = -1;
        }
        succ_[x1] = -1;
        pred_[b] = -1;
        for (int len : closed) ++remaining_[len];
        alpha_[a] = alpha_[b] = -1;
    }

    void search(int active)
    {
        Dart d = -1;
        for (Dart x = 0; x < active * s_; ++x)
            if (alpha_[x] < 0) {
                d = x;
                break;
            }
        if (d < 0) {
            if (active == f_) record();
            return;
        }
        for (Dart e = d + 1; e < active * s_; ++e)
            if (alpha_[e] < 0) glue(d, e, active);
        if (active < f_) glue(d, active * s_, active + 1);
    }

    void record()
    {
        for (int r : remaining_)
            if (r != 0) return;
        Permutation alpha(alpha_.begin(), alpha_.end());
        Permutation sigma(n_);
        for (Dart x = 0; x < n_; ++x) sigma[x] = alpha_[phi(x)];
        CombinatorialMap map(std::move(alpha), std::move(sigma));
        auto label = canonical_label(map);
        found_.try_emplace(std::move(label), std::move(map));
    }

    int s_, f_, n_;
    std::vector<Dart> alpha_, succ_, pred_;
    std::vector<int> remaining_;
    std::map<std::string, CombinatorialMap> found_;
};

} // namespace

std::vector<CombinatorialMap> enumerate_small_maps(int face_size, int face_count, const CurvatureProfile& profile)
{
    flat_degree(face_size);
    if (face_count > kSmallMapFaceLimit)
        throw DomainError("enumerate_small_maps is limited to " + std::to_string(kSmallMapFaceLimit) + " faces");
    if (face_count <= 0) return {};

    const auto counts = profile.counts();
    const int darts = face_size * face_count;
    int vertices = 0, degree_sum = 0;
    for (const auto& [deg, cnt] : counts) {
        vertices += cnt;
        degree_sum += deg * cnt;
    }
    // Sphere: V - E + F = 2 and the degrees account for every dart.
    if (darts % 2 != 0 || degree_sum != darts || vertices - darts / 2 + face_count != 2) return {};

    auto found = Gluer(face_size, face_count, counts).run();
    std::vector<CombinatorialMap> out;
    out.reserve(found.size());
    for (auto& [label, map] : found) out.push_back(std::move(map));
    return out;
}

} // namespace hyperlat
