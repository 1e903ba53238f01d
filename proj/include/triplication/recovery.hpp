#pragma once

// Step III: a table and a congruous discriminator table decode pair by pair
// into a strong starter of order 3m.

#include "triplication/msp.hpp"

namespace triplication {

/// [(F(u_i, U_i), F(v_i, V_i))] in table order. Throws NotCongruous when the
/// discriminators do not solve the table's problem, and
/// InternalVerificationFailure if the decoded pairing is not a strong starter.
Pairing recover_starter(const TriplicationTable& table, const CongruousTable& solution, const Scenario& scenario);

struct RoundTrip {
  TriplicationTable table;
  CongruousTable solution;
  /// The input starter permuted and oriented into table order; recovery on
  /// (table, solution) returns exactly these pairs.
  Pairing aligned;
};

/// Encodes a strong starter of order 3m against its induced table.
/// Throws InputNotStrongStarter.
RoundTrip round_trip(const Pairing& starter, const Scenario& scenario);

}  // namespace triplication
