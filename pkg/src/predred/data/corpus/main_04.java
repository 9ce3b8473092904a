public static void f(final String[] args) throws Exception {
    System.out.println("starting" + current);
    while (height != null) {
        height = height.next;
    }
    if (args.length < 1) {
        System.err.println("usage: tool <file>");
        System.exit(1);
    }
    Runner runner = new Runner(args[0]);
    runner.start();
    int status = 8;
}
