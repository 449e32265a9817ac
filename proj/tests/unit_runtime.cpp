#include "doctest.h"

#include "aspectke/runtime.hpp"
#include "support.hpp"
#include "unit_helpers.hpp"

using namespace aspectke;
using namespace aspectke::testing;

namespace {

SystemState with_aspects(const std::string& system, const std::string& aspects) {
  SystemState s = parse_system(system);
  for (auto& a : parse_aspect_file(aspects)) s.aspects.push_back(a);
  return s;
}

}  // namespace

TEST_CASE("enabled_candidates") {
  SystemState s = parse_system(kRunningExample);
  auto cands = enabled_candidates(s);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].item == 2);
  CHECK(cands[0].branch == 0);
  CHECK(cands[0].tuple == 0u);
  CHECK_FALSE(cands[0].unfold);

  CHECK(enabled_candidates(parse_system("let in A :: <K> || B :: <L>")).empty());

  SystemState blocked = parse_system("let in A :: <K> || B :: in(L)@A.out(M)@B");
  CHECK(enabled_candidates(blocked).empty());
  RunResult r = run(blocked, 0);
  CHECK(r.trace.empty());
  CHECK(r.halt == HaltReason::Quiescent);

  SystemState multi = parse_system("let in A :: <K> || A :: <L> || A :: <K> || B :: read(!x)@A + out(M)@B");
  auto mc = enabled_candidates(multi);
  REQUIRE(mc.size() == 4);
  CHECK(mc[0].tuple == 0u);
  CHECK(mc[1].tuple == 1u);
  CHECK(mc[2].tuple == 2u);
  CHECK(mc[3].branch == 1);
  CHECK_FALSE(mc[3].tuple);
}

TEST_CASE("the running example runs to its expected final net") {
  RunResult r = run(parse_system(kRunningExample), 0);
  REQUIRE(r.trace.size() == 3);
  CHECK(r.halt == HaltReason::Quiescent);
  CHECK(r.trace[0].bindings.at("content") == c("alicetext"));
  Net expected = net_of(
      "EHDB :: <Alice, MedicalRecord, DrHansen, Past, alicetext> ||"
      "EHDB :: <Alice, MedicalRecord, DrSmith, Recent, newtext> ||"
      "EHDB :: <Bob, PrivateNote, DrJensen, Recent, bobtext> ||"
      "DrSmith :: <Alice, alicetext>");
  CHECK(same_multiset(r.final_net(), expected));
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    CHECK(same_multiset(run(parse_system(kRunningExample), seed).final_net(), expected));
  }
}

TEST_CASE("a denied out kills the process") {
  RunResult r = run(with_aspects(kRunningExample, kA1Out), 0);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[1].verdict.decision == Decision::Deny);
  CHECK(r.trace[1].effect == TraceEvent::Effect::Denied);
  CHECK(count_tuples(r.final_net(), "EHDB") == 2);
  CHECK(count_tuples(r.final_net(), "DrSmith") == 0);
  CHECK(has_nil_at(r.final_net(), "DrSmith"));
}

TEST_CASE("a denied read leaves the tuple") {
  RunResult r = run(with_aspects(kRunningExample,
                                 "A2_read[user :: read(_, _, _, _, _)@EHDB.X] = "
                                 "case (out in Act(X)) break; proceed"),
                    0);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].verdict.decision == Decision::Deny);
  CHECK(r.trace[0].bindings.empty());
  CHECK(same_multiset(r.final_net(),
                      net_of("EHDB :: <Alice, MedicalRecord, DrHansen, Past, alicetext> ||"
                             "EHDB :: <Bob, PrivateNote, DrJensen, Recent, bobtext> ||"
                             "DrSmith :: 0")));
}

TEST_CASE("deny kills every branch of the sum") {
  RunResult r = run(with_aspects("let in A :: out(K)@B + out(L)@B",
                                 "D[s :: out(K)@B] = break"),
                    3);
  REQUIRE(r.trace.size() == 1);
  if (r.trace[0].verdict.decision == Decision::Deny) {
    CHECK(count_tuples(r.final_net(), "B") == 0);
  } else {
    CHECK(has_tuple(r.final_net(), "B", {"L"}));
  }
  CHECK(has_nil_at(r.final_net(), "A") == (r.trace[0].verdict.decision == Decision::Deny));
}

TEST_CASE("in, eval and newloc effects") {
  RunResult in = run(parse_system("let in A :: <K, L> || B :: in(K, !x)@A.out(x)@B"), 0);
  CHECK(count_tuples(in.final_net(), "A") == 0);
  CHECK(has_tuple(in.final_net(), "B", {"L"}));

  RunResult ev = run(parse_system("let in A :: eval(out(K)@C)@B.out(L)@A"), 0);
  CHECK(has_tuple(ev.final_net(), "C", {"K"}));
  CHECK(has_tuple(ev.final_net(), "A", {"L"}));
  CHECK(ev.trace.size() == 3);
  bool ran_at_b = false;
  for (const auto& e : ev.trace) ran_at_b = ran_at_b || (e.node == "B" && e.action == "out(K)@C");
  CHECK(ran_at_b);

  RunResult nl = run(parse_system("let in A :: newloc(!u).out(u)@A"), 0);
  CHECK(has_tuple(nl.final_net(), "A", {"loc$0"}));
  CHECK(has_nil_at(nl.final_net(), "loc$0"));
  CHECK(nl.final_state.fresh_counter == 1);
}

TEST_CASE("replication unfolds under a budget") {
  RunResult r = run(parse_system("let in A :: *out(K)@A"), 0, 5);
  CHECK(r.halt == HaltReason::StepBudget);
  CHECK(r.trace.size() == 5);
  CHECK(r.trace[0].effect == TraceEvent::Effect::Unfolded);
  std::size_t outs = 0;
  for (const auto& e : r.trace) outs += e.effect == TraceEvent::Effect::Executed;
  CHECK(count_tuples(r.final_net(), "A") == outs);
}

TEST_CASE("a race changes the trace but not the final tuples") {
  SystemState s = parse_system("let in A :: out(K)@C || B :: out(L)@C");
  Net first = run(s, 0).final_net();
  std::set<std::string> orders;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunResult r = run(s, seed);
    orders.insert(r.trace[0].node);
    CHECK(same_multiset(r.final_net(), first));
  }
  CHECK(orders.size() == 2);
}

TEST_CASE("fresh_location") {
  SystemState s = parse_system("let in A :: <K>");
  CHECK(fresh_location(s) == "loc$0");
  CHECK(s.fresh_counter == 1);
  CHECK(fresh_location(s) == "loc$1");

  SystemState clash;
  clash.net.items.push_back(LocatedItem::tuple("A", Tuple{{"loc$0"}}));
  clash.net.items.push_back(LocatedItem::tuple("loc$1", Tuple{{"K"}}));
  CHECK(fresh_location(clash) == "loc$2");
}

TEST_CASE("manager rules for newloc") {
  const char* store =
      "let in RDB :: <MgDavis, Manager> || PDB :: <Manager, Location, newloc> || "
      "PDB :: <Manager, RDB, out> || ";
  const char* aspects =
      "A_p2_newloc[user :: newloc(_)] = case (test(user, Manager)@RDB /\\ "
      "test(Manager, Location, newloc)@PDB) proceed; break\n"
      "A_p2_out[user :: out(_, _)@RDB] = case (test(user, Manager)@RDB /\\ "
      "test(Manager, RDB, out)@PDB) proceed; break";
  RunResult ok = run(with_aspects(std::string(store) + "MgDavis :: newloc(!patient).out(patient, Patient)@RDB", aspects), 0);
  REQUIRE(ok.trace.size() == 2);
  CHECK(ok.trace[0].verdict.decision == Decision::Allow);
  CHECK(ok.trace[1].verdict.decision == Decision::Allow);
  CHECK(has_tuple(ok.final_net(), "RDB", {"loc$0", "Patient"}));

  RunResult no = run(with_aspects(std::string(store) + "NsOlsen :: newloc(!patient).out(patient, Patient)@RDB", aspects), 0);
  REQUIRE(no.trace.size() == 1);
  CHECK(no.trace[0].verdict.decision == Decision::Deny);
}

TEST_CASE("execute is pure") {
  SystemState s = parse_system(kRunningExample);
  SystemState before = s;
  auto [after, event] = execute(s, enabled_candidates(s).at(0));
  CHECK(s == before);
  CHECK(event.step == 1);
  CHECK(event.effect == TraceEvent::Effect::Executed);
  CHECK(has_tuple(after.net, "EHDB", {"Alice", "MedicalRecord", "DrHansen", "Past", "alicetext"}));
}

TEST_CASE("trace and net formatting") {
  RunResult r = run(with_aspects(kRunningExample, kA1Out), 0);
  CHECK(format_trace_event(r.trace[0]) ==
        "#1 DrSmith :: read(Alice, MedicalRecord, DrHansen, Past, !content)@EHDB => ALLOW [] "
        "{content=alicetext}");
  CHECK(format_trace_event(r.trace[1]) ==
        "#2 DrSmith :: out(Alice, alicetext)@DrSmith => DENY [A1_out:break] {}");
  CHECK(format_net(net_of("B :: <K> || A :: out(K)@B || A :: <L>")) ==
        "let in\n  A :: out(K)@B ||\n  A :: <L> ||\n  B :: <K>\n");
  CHECK(to_string(HaltReason::Quiescent) == "quiescent");
  CHECK(to_string(HaltReason::StepBudget) == "step budget");
}
