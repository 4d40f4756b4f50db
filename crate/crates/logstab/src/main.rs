fn main() {
    // Die quietly on a closed pipe (`logstab ... | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(logstab::cli::run(std::env::args_os()));
}
