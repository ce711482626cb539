#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "ringop/run_config.hpp"
#include "ringop/table_io.hpp"

// Exit codes: 0 success, 2 usage error, 3 I/O error.
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const ringop::RunConfig config = ringop::parse_args(args);
        ringop::run_command(config);
        return 0;
    } catch (const ringop::HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const ringop::UsageError& error) {
        std::cerr << "error: " << error.what() << '\n'
                  << "run 'ringop --help' for usage\n";
        return 2;
    } catch (const ringop::IoError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
}
