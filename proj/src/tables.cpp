#include "mfnps/tables.hpp"

#include <algorithm>
#include <numeric>

#include "mfnps/errors.hpp"

namespace mfnps {

namespace {

constexpr double kStateSweepCouplings[] = {0.1, 1.0, 100.0};
constexpr double kStrongCouplings[] = {0.01, 10.0, 100.0};

std::vector<int> range(int first, int last) {
  std::vector<int> out(static_cast<std::size_t>(last - first + 1));
  std::iota(out.begin(), out.end(), first);
  return out;
}

std::vector<std::string> lambda_labels(const double (&values)[3]) {
  std::vector<std::string> out;
  for (double v : values) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    out.push_back("lambda=" + s);
  }
  return out;
}

}  // namespace

const std::vector<int>& table_ids() {
  static const std::vector<int> ids{1, 2, 3, 5, 6, 7, 8, 9};
  return ids;
}

bool is_valid_table_id(int id) {
  const auto& ids = table_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

TableLayout table_layout(int id) {
  TableLayout t;
  t.id = id;
  switch (id) {
    case 1:
      t.title = "Ground state, lambda=1, two-step splitting (w, W1)";
      t.row_header = "K";
      t.columns = {"chain:1"};
      t.row_values = range(0, 15);
      break;
    case 2:
      t.title = "Ground state, lambda=1, multi-step splitting";
      t.row_header = "K";
      t.columns = {"chain:2", "chain:3", "chain:4"};
      t.row_values = range(0, 15);
      break;
    case 3:
      t.title = "Ground state, two-step splitting, strong and weak coupling";
      t.row_header = "K";
      t.columns = lambda_labels(kStrongCouplings);
      t.row_values = range(13, 15);
      break;
    case 5:
      t.title = "Excited states, K=15, ground-state two-step parameters";
      t.row_header = "n";
      t.columns = lambda_labels(kStateSweepCouplings);
      t.row_values = range(1, 10);
      break;
    case 6:
    case 7:
      t.title = std::string("Excited states, K=") + (id == 6 ? "14" : "15") +
                ", single-step variational parameters";
      t.row_header = "n";
      t.columns = lambda_labels(kStateSweepCouplings);
      t.row_values = range(1, 10);
      break;
    case 8:
    case 9:
      t.title = std::string("Excited states, K=") + (id == 8 ? "14" : "15") +
                ", two-step variational parameters";
      t.row_header = "n";
      t.columns = lambda_labels(kStateSweepCouplings);
      t.row_values = range(1, 10);
      break;
    default:
      throw InputError("unknown table id " + std::to_string(id) +
                       " (valid: 1, 2, 3, 5, 6, 7, 8, 9)");
  }
  return t;
}

SchemeSpec table_cell_scheme(int id, std::size_t column, int row_value) {
  switch (id) {
    case 1:
      return chain_scheme(1.0, 1);
    case 2:
      return chain_scheme(1.0, static_cast<int>(column) + 2);
    case 3:
      return chain_scheme(kStrongCouplings[column], 1);
    case 5:
      return chain_scheme(kStateSweepCouplings[column], 1);
    case 6:
    case 7:
      return variational_single_step(kStateSweepCouplings[column], row_value);
    case 8:
    case 9:
      return variational_two_step(kStateSweepCouplings[column], row_value);
    default:
      throw InputError("unknown table id " + std::to_string(id));
  }
}

int table_cell_state(int id, int row_value) { return id <= 3 ? 0 : row_value; }

int table_cell_order(int id, int row_value) {
  switch (id) {
    case 1:
    case 2:
    case 3:
      return row_value;
    case 6:
    case 8:
      return 14;
    default:
      return 15;
  }
}

ComputedTable compute_table(int id, const SolverOptions& options) {
  ComputedTable out;
  out.layout = table_layout(id);
  for (int row : out.layout.row_values) {
    std::vector<EnergySolution> cells;
    for (std::size_t c = 0; c < out.layout.columns.size(); ++c) {
      cells.push_back(self_consistent_energy(table_cell_scheme(id, c, row),
                                             table_cell_state(id, row),
                                             table_cell_order(id, row), options));
    }
    out.cells.push_back(std::move(cells));
  }
  return out;
}

}  // namespace mfnps
