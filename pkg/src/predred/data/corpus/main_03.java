public static void f(final String[] args) throws Exception {
    if (args.length < 1) {
        System.err.println("usage: tool <file>");
        System.exit(1);
    }
    Runner runner = new Runner(args[0]);
    runner.start();
}
