#pragma once

#include <string>
#include <vector>

#include "mfnps/solver.hpp"

namespace mfnps {

/// Layouts of the reproducible reference tables. Ids 1-3 are ground-state
/// convergence studies, 5 applies ground-state chain parameters to excited
/// states, 6-9 use state-dependent variational parameters at K = 14 / 15.
struct TableLayout {
  int id = 0;
  std::string title;
  std::string row_header;            // "K" or "n"
  std::vector<std::string> columns;  // column labels
  std::vector<int> row_values;       // K or n per row
};

bool is_valid_table_id(int id);
const std::vector<int>& table_ids();

/// Throws InputError for an unknown id.
TableLayout table_layout(int id);

/// Scheme for a given cell; `row_value` is K or n depending on the layout.
SchemeSpec table_cell_scheme(int id, std::size_t column, int row_value);
int table_cell_state(int id, int row_value);
int table_cell_order(int id, int row_value);

struct ComputedTable {
  TableLayout layout;
  std::vector<std::vector<EnergySolution>> cells;  // [row][column]
};

ComputedTable compute_table(int id, const SolverOptions& options = {});

}  // namespace mfnps
