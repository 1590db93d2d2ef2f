#include "fwat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fwat {

Topology::Topology(int n, std::vector<std::pair<int, int>> edges, bool holiday)
    : n_(n), holiday_(holiday) {
    if (n < 1) throw std::invalid_argument("Topology: node count must be >= 1");
    if (holiday && !edges.empty())
        throw std::invalid_argument("Topology: a holiday topology must be edgeless");

    std::set<std::pair<int, int>> normalized;
    for (auto [i, j] : edges) {
        if (i == j) throw std::invalid_argument("Topology: self-loop rejected");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("Topology: edge endpoint out of range");
        normalized.emplace(std::min(i, j), std::max(i, j));
    }
    edges_.assign(normalized.begin(), normalized.end());

    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Topology Topology::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Topology(n, std::move(e));
}

Topology Topology::ring(int n) {
    if (n < 3) throw std::invalid_argument("Topology::ring: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Topology(n, std::move(e));
}

Topology Topology::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Topology(n, std::move(e));
}

Topology Topology::edgeless(int n, bool holiday) { return Topology(n, {}, holiday); }

Topology Topology::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Topology::load: cannot open " + path);
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            ls >> tag >> n;
            if (tag != "n" || !ls || n < 1)
                throw std::runtime_error("Topology::load: expected header 'n <count>' in " + path);
            continue;
        }
        int i = 0, j = 0;
        if (!(ls >> i >> j)) throw std::runtime_error("Topology::load: bad edge line '" + line + "'");
        edges.emplace_back(i - 1, j - 1);  // files are 1-based
    }
    if (n < 0) throw std::runtime_error("Topology::load: missing header in " + path);
    return Topology(n, std::move(edges));
}

LaplacianMatrix build_laplacian(const Topology& topology) {
    const int n = topology.node_count();
    if (n < 2) throw std::invalid_argument("build_laplacian: need at least 2 nodes");
    LaplacianMatrix l;
    l.m = Mat(n, n);
    for (auto [i, j] : topology.edges()) {
        l.m(i, j) = -1.0;
        l.m(j, i) = -1.0;
    }
    for (int i = 0; i < n; ++i) l.m(i, i) = static_cast<double>(topology.degree(i));
    l.lambda2 = algebraic_connectivity(l.m);
    return l;
}

double algebraic_connectivity(const Mat& laplacian) {
    const Vec eig = symmetric_eigenvalues(laplacian);
    if (eig.size() < 2) return 0.0;
    const double lam2 = eig[1];
    const double scale = std::max(1.0, std::abs(eig.back()));
    if (lam2 < 1e-12 * scale) return 0.0;  // disconnected up to round-off
    return lam2;
}

bool is_connected(const Topology& topology) {
    const int n = topology.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : topology.adjacency()[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

SwitchingSchedule::SwitchingSchedule(std::vector<Topology> topologies,
                                     std::vector<double> switch_times,
                                     std::vector<int> active_index,
                                     double min_dwell)
    : topologies_(std::move(topologies)),
      switch_times_(std::move(switch_times)),
      active_index_(std::move(active_index)),
      min_dwell_(min_dwell) {
    if (topologies_.empty()) throw std::invalid_argument("SwitchingSchedule: no topologies");
    if (switch_times_.empty() || switch_times_.size() != active_index_.size())
        throw std::invalid_argument("SwitchingSchedule: times/index length mismatch");
    if (min_dwell_ <= 0.0) throw std::invalid_argument("SwitchingSchedule: min dwell must be > 0");

    const int n = topologies_.front().node_count();
    for (const auto& t : topologies_) {
        if (t.node_count() != n)
            throw std::invalid_argument("SwitchingSchedule: node counts differ across topologies");
        if (!t.holiday() && !is_connected(t))
            throw std::invalid_argument(
                "SwitchingSchedule: every topology must be connected (or flagged holiday)");
    }
    for (std::size_t k = 0; k + 1 < switch_times_.size(); ++k) {
        if (!(switch_times_[k + 1] - switch_times_[k] > min_dwell_))
            throw std::invalid_argument("SwitchingSchedule: switch interval not longer than dwell");
    }
    for (int idx : active_index_) {
        if (idx < 0 || idx >= static_cast<int>(topologies_.size()))
            throw std::invalid_argument("SwitchingSchedule: topology index out of range");
    }

    laplacians_.reserve(topologies_.size());
    for (const auto& t : topologies_) laplacians_.push_back(build_laplacian(t));
}

SwitchingSchedule SwitchingSchedule::single(Topology topology, double t_start) {
    return SwitchingSchedule({std::move(topology)}, {t_start}, {0}, 1.0);
}

SwitchingSchedule SwitchingSchedule::cyclic(std::vector<Topology> topologies, double t_start,
                                            double period, double horizon, double min_dwell) {
    if (period <= 0.0) throw std::invalid_argument("SwitchingSchedule::cyclic: period must be > 0");
    std::vector<double> times;
    std::vector<int> idx;
    int k = 0;
    for (double t = t_start; t < horizon; t += period, ++k) {
        times.push_back(t);
        idx.push_back(k % static_cast<int>(topologies.size()));
    }
    return SwitchingSchedule(std::move(topologies), std::move(times), std::move(idx), min_dwell);
}

SwitchingSchedule SwitchingSchedule::load(const std::string& path,
                                          std::vector<Topology> topologies) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("SwitchingSchedule::load: cannot open " + path);
    double dwell = -1.0;
    std::vector<double> times;
    std::vector<int> idx;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "dwell") {
            if (!(ls >> dwell)) throw std::runtime_error("SwitchingSchedule::load: bad dwell line");
            continue;
        }
        double t = std::stod(head);
        int k = 0;
        if (!(ls >> k)) throw std::runtime_error("SwitchingSchedule::load: bad entry '" + line + "'");
        times.push_back(t);
        idx.push_back(k - 1);  // files are 1-based
    }
    if (dwell <= 0.0) throw std::runtime_error("SwitchingSchedule::load: missing 'dwell' line");
    return SwitchingSchedule(std::move(topologies), std::move(times), std::move(idx), dwell);
}

bool SwitchingSchedule::has_holiday() const {
    for (int idx : active_index_)
        if (topologies_[idx].holiday()) return true;
    return false;
}

int SwitchingSchedule::interval_at(double t) const {
    if (t < switch_times_.front())
        throw std::invalid_argument("SwitchingSchedule: time precedes the first switch time");
    // last k with switch_times_[k] <= t
    const auto it = std::upper_bound(switch_times_.begin(), switch_times_.end(), t);
    return static_cast<int>(it - switch_times_.begin()) - 1;
}

double min_lambda2(const SwitchingSchedule& schedule) {
    double best = -1.0;
    for (int idx : schedule.active_index()) {
        if (schedule.topologies()[idx].holiday()) continue;
        const double l2 = schedule.laplacians()[idx].lambda2;
        if (best < 0.0 || l2 < best) best = l2;
    }
    if (best < 0.0)
        throw std::invalid_argument("min_lambda2: every interval of the schedule is a holiday");
    return best;
}

const LaplacianMatrix& active_laplacian(const SwitchingSchedule& schedule, double t) {
    return schedule.laplacians()[schedule.active_index()[schedule.interval_at(t)]];
}

}  // namespace fwat
