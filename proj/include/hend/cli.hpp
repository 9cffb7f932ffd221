#pragma once

namespace hend {

/// Entry point shared by the installed binary and in-process tests.
/// Returns 0 on pass/success, 1 on audit failure, 2 on usage errors.
int cli_main(int argc, const char* const* argv);

}  // namespace hend
