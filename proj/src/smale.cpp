#include "solk/smale.hpp"

#include <algorithm>
#include <cmath>

namespace solk {

namespace {

// double-double style conversion keeps ~106 significant bits on the way in
long double to_ld(const mpq_class& q) {
    double head = q.get_d();
    double tail = mpq_class(q - mpq_class(head)).get_d();
    return static_cast<long double>(head) + static_cast<long double>(tail);
}

} // namespace

Solenoid::Solenoid(const GraphPresentation& oriented, const PerronData& pd) : pres_(oriented) {
    if (!oriented.all_positive())
        throw DomainError("Solenoid needs an oriented (all-positive) presentation");
    lambda_ = to_ld(pd.lambda.mid());
    if (lambda_ <= 1.0L) throw DomainError("Solenoid needs an expanding presentation");
    int n = oriented.size();
    measure_.resize(n);
    for (int i = 0; i < n; ++i) measure_[i] = to_ld(pd.v[i].mid());
    cuts_.resize(n);
    for (int i = 0; i < n; ++i) {
        cuts_[i].resize(oriented.words[i].size() + 1);
        long double acc = 0.0L;
        cuts_[i][0] = 0.0L;
        for (size_t j = 0; j < oriented.words[i].size(); ++j) {
            acc += measure_[oriented.words[i][j].edge] / lambda_;
            cuts_[i][j + 1] = acc;
        }
        // the cut sums telescope to v_i exactly in real arithmetic; pin it
        cuts_[i].back() = measure_[i];
    }
}

long double Solenoid::tail_bound(int depth) const {
    return powl(lambda_, static_cast<long double>(-depth)) / (lambda_ - 1.0L);
}

GraphPoint Solenoid::apply_f(const GraphPoint& p) const {
    const auto& cuts = cuts_[p.edge];
    const Word& word = pres_.words[p.edge];
    size_t j = std::upper_bound(cuts.begin(), cuts.end(), p.pos) - cuts.begin();
    if (j > 0) --j;
    if (j >= word.size()) j = word.size() - 1;
    int target = word[j].edge;
    long double out = (p.pos - cuts[j]) * lambda_;
    out = std::clamp(out, 0.0L, std::nextafterl(measure_[target], 0.0L));
    return {target, out};
}

std::vector<GraphPoint> Solenoid::preimages(const GraphPoint& p) const {
    std::vector<GraphPoint> pre;
    for (int i = 0; i < pres_.size(); ++i)
        for (size_t j = 0; j < pres_.words[i].size(); ++j)
            if (pres_.words[i][j].edge == p.edge)
                pre.push_back({i, cuts_[i][j] + p.pos / lambda_});
    return pre;
}

SolenoidPoint Solenoid::shift_forward(const SolenoidPoint& x) const {
    SolenoidPoint y;
    y.coords.reserve(x.coords.size());
    y.coords.push_back(apply_f(x.coords.front()));
    for (size_t i = 0; i + 1 < x.coords.size(); ++i) y.coords.push_back(x.coords[i]);
    return y;
}

SolenoidPoint Solenoid::shift_backward(const SolenoidPoint& x) const {
    if (x.depth() < 1) throw DomainError("backward shift at depth 0");
    SolenoidPoint y;
    y.coords.assign(x.coords.begin() + 1, x.coords.end());
    return y;
}

long double Solenoid::d0(const GraphPoint& a, const GraphPoint& b) const {
    long double va = measure_[a.edge], vb = measure_[b.edge];
    long double a_to_v = std::min(a.pos, va - a.pos);
    long double b_to_v = std::min(b.pos, vb - b.pos);
    if (a.edge != b.edge) return a_to_v + b_to_v;
    long double direct = fabsl(a.pos - b.pos);
    return std::min(std::min(direct, va - direct), a_to_v + b_to_v);
}

DistBound Solenoid::metric(const SolenoidPoint& x, const SolenoidPoint& y) const {
    if (x.depth() != y.depth()) throw DomainError("metric needs equal depths");
    long double sum = 0.0L, scale = 1.0L;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        sum += scale * d0(x.coords[i], y.coords[i]);
        scale /= lambda_;
    }
    return {sum, sum + tail_bound(x.depth())};
}

BracketResult Solenoid::bracket(const SolenoidPoint& x, const SolenoidPoint& y) const {
    int depth = std::min(x.depth(), y.depth());
    DistBound d = metric(SolenoidPoint{{x.coords.begin(), x.coords.begin() + depth + 1}},
                         SolenoidPoint{{y.coords.begin(), y.coords.begin() + depth + 1}});
    if (d.lo > 2.0L * lambda0())
        throw DomainError("bracket precondition: points farther apart than 2/lambda");

    BracketResult result;
    result.point.coords.push_back(x.coords.front());
    result.certified_depth = 0;
    std::vector<GraphPoint> level{x.coords.front()};
    long double radius = lambda0();
    for (int n = 1; n <= depth; ++n) {
        radius /= lambda_; // lambda0^n
        std::vector<GraphPoint> next;
        for (const auto& c : level)
            for (const auto& q : preimages(c)) {
                bool dup = false;
                for (const auto& seen : next)
                    if (d0(seen, q) < 1e-15L) { dup = true; break; }
                if (!dup && d0(q, y.coords[n]) <= 3.0L * radius) next.push_back(q);
            }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), [&](const GraphPoint& a, const GraphPoint& b) {
            return d0(a, y.coords[n]) < d0(b, y.coords[n]);
        });
        long double ball = radius / lambda_; // lambda0^(n+1)
        bool unique = d0(next[0], y.coords[n]) <= ball * (1.0L + 1e-9L) &&
                      (next.size() < 2 || d0(next[0], next[1]) > 2.0L * ball);
        if (!unique) break;
        result.point.coords.push_back(next[0]);
        result.certified_depth = n;
        // keep every pruned candidate as a parent so runner-up branches stay
        // visible to the separation check one level down
        level = std::move(next);
    }
    return result;
}

ContractionReport Solenoid::stable_contraction(const SolenoidPoint& x, const SolenoidPoint& y,
                                               int steps) const {
    ContractionReport report;
    SolenoidPoint fx = x, fy = y;
    long double prev = metric(fx, fy).lo;
    if (prev < 1e-30L) {
        report.coincident = true;
        return report;
    }
    for (int k = 0; k < steps; ++k) {
        fx = shift_forward(fx);
        fy = shift_forward(fy);
        long double cur = metric(fx, fy).lo;
        if (prev < 1e-30L) break;
        report.ratios.push_back(cur / prev);
        prev = cur;
    }
    report.max_ratio = 0.0L;
    for (long double r : report.ratios) report.max_ratio = std::max(report.max_ratio, r);
    return report;
}

SolenoidPoint Solenoid::random_point(std::mt19937_64& rng, int depth) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    long double pick = unit(rng);
    int edge = 0;
    long double acc = 0.0L;
    for (int i = 0; i < edge_count(); ++i) {
        acc += measure_[i];
        if (pick <= acc) { edge = i; break; }
        edge = i;
    }
    SolenoidPoint x;
    x.coords.push_back({edge, static_cast<long double>(unit(rng)) * measure_[edge]});
    for (int k = 0; k < depth; ++k) {
        auto pre = preimages(x.coords.back());
        x.coords.push_back(pre[rng() % pre.size()]);
    }
    return x;
}

SolenoidPoint Solenoid::random_stable_companion(const SolenoidPoint& x, std::mt19937_64& rng,
                                                int split_depth) const {
    SolenoidPoint y;
    int cut = std::min(split_depth, x.depth());
    y.coords.assign(x.coords.begin(), x.coords.begin() + cut + 1);
    while (y.depth() < x.depth()) {
        auto pre = preimages(y.coords.back());
        y.coords.push_back(pre[rng() % pre.size()]);
    }
    return y;
}

SolenoidPoint Solenoid::random_nearby(const SolenoidPoint& x, std::mt19937_64& rng,
                                      long double delta) const {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GraphPoint head = x.coords.front();
    long double shifted = head.pos + static_cast<long double>(unit(rng)) * delta;
    long double vm = measure_[head.edge];
    while (shifted < 0.0L) shifted += vm;
    while (shifted >= vm) shifted -= vm;
    SolenoidPoint y;
    y.coords.push_back({head.edge, shifted});
    for (int k = 1; k <= x.depth(); ++k) {
        auto pre = preimages(y.coords.back());
        const GraphPoint* best = &pre.front();
        long double bd = d0(pre.front(), x.coords[k]);
        for (const auto& q : pre) {
            long double dq = d0(q, x.coords[k]);
            if (dq < bd) { bd = dq; best = &q; }
        }
        y.coords.push_back(*best);
    }
    return y;
}

bool Solenoid::consistent(const SolenoidPoint& x, long double tol) const {
    for (size_t i = 0; i + 1 < x.coords.size(); ++i)
        if (d0(apply_f(x.coords[i + 1]), x.coords[i]) > tol) return false;
    return true;
}

} // namespace solk
