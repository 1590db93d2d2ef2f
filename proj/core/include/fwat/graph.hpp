#pragma once

#include "fwat/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fwat {

// Undirected, unweighted graph on nodes {0..n-1}. Edges are stored as
// normalized pairs (i < j), deduplicated; self-loops are rejected.
// A topology flagged `holiday` must be edgeless: it marks an interval of a
// switching schedule during which all agents are deliberately disconnected.
class Topology {
public:
    Topology(int n, std::vector<std::pair<int, int>> edges, bool holiday = false);

    int node_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool holiday() const { return holiday_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }

    static Topology path(int n);
    static Topology ring(int n);
    static Topology complete(int n);
    static Topology edgeless(int n, bool holiday = false);

    // Edge-list text: header "n <count>", then one "i j" line per edge
    // (1-based node ids). Lines starting with '#' are ignored.
    static Topology load(const std::string& path);

private:
    int n_ = 0;
    bool holiday_ = false;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct LaplacianMatrix {
    Mat m;
    double lambda2 = 0.0;  // cached algebraic connectivity
    int n() const { return m.rows(); }
};

// L = D - A with the second-smallest eigenvalue cached. Rejects n < 2.
LaplacianMatrix build_laplacian(const Topology& topology);

// Second-smallest eigenvalue of a Laplacian; exact zeros are snapped so a
// disconnected graph reports 0 rather than round-off noise.
double algebraic_connectivity(const Mat& laplacian);
inline double algebraic_connectivity(const LaplacianMatrix& l) { return l.lambda2; }

bool is_connected(const Topology& topology);

// Piecewise-constant graph signal: topology `active_index[k]` is active on
// [switch_times[k], switch_times[k+1]), the last interval extending forever.
class SwitchingSchedule {
public:
    SwitchingSchedule(std::vector<Topology> topologies,
                      std::vector<double> switch_times,
                      std::vector<int> active_index,
                      double min_dwell);

    static SwitchingSchedule single(Topology topology, double t_start = 0.0);
    // Cycles through the given topologies every `period` seconds starting at
    // t_start, emitting switch points up to `horizon`.
    static SwitchingSchedule cyclic(std::vector<Topology> topologies, double t_start,
                                    double period, double horizon, double min_dwell);
    // Schedule text: "dwell <tau>" line plus "t k" lines (1-based topology
    // indices, strictly increasing times).
    static SwitchingSchedule load(const std::string& path, std::vector<Topology> topologies);

    const std::vector<Topology>& topologies() const { return topologies_; }
    const std::vector<LaplacianMatrix>& laplacians() const { return laplacians_; }
    const std::vector<double>& switch_times() const { return switch_times_; }
    const std::vector<int>& active_index() const { return active_index_; }
    double min_dwell() const { return min_dwell_; }
    int agent_count() const { return topologies_.front().node_count(); }
    bool has_holiday() const;

    // Index of the interval containing t (closed-left, open-right).
    // Throws if t precedes the first switch time.
    int interval_at(double t) const;

private:
    std::vector<Topology> topologies_;
    std::vector<LaplacianMatrix> laplacians_;
    std::vector<double> switch_times_;
    std::vector<int> active_index_;
    double min_dwell_ = 0.0;
};

// min over the schedule's topologies of lambda2, holiday intervals excluded.
// Throws if every interval is a holiday.
double min_lambda2(const SwitchingSchedule& schedule);

const LaplacianMatrix& active_laplacian(const SwitchingSchedule& schedule, double t);

}  // namespace fwat
