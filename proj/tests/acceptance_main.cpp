// Acceptance gate: runs every verification suite through the C API and
// fails the process if any criterion fails. One PASS/FAIL line is printed
// per criterion by the library.

#include <cstdio>

#include "pseudoquot.h"

int main() {
  int failures = 0;
  pq_status status = pq_verify_suite("all", 0, &failures);
  if (status != PQ_OK) {
    std::fprintf(stderr, "acceptance: suite runner failed: %s (%s)\n",
                 pq_status_name(status), pq_last_error());
    return 2;
  }
  std::printf("acceptance: %d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
