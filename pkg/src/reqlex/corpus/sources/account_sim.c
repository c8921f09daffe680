/* io: inputs=4 outputs=5 */
#include <stdio.h>
int apply_interest(int balance, int rate)
{
    int gain;
    if (rate > 50)
        rate = 50;
    gain = balance * rate / 100;
    if (gain < 1)
        gain = 1;
    return balance + gain;
}
int apply_fee(int balance, int fee)
{
    if (balance < fee)
        return 0;
    return balance - fee;
}
void report(int month, int balance, int start)
{
    printf("month %d balance %d\n", month, balance);
    if (balance > start * 2)
        printf("balance doubled\n");
    if (balance == 0)
        printf("account empty\n");
}
int main()
{
    int balance, rate, fee, months, month, start;
    scanf("%d %d %d %d", &balance, &rate, &fee, &months);
    if (months < 1)
        months = 1;
    if (balance < 0)
        balance = 0;
    start = balance;
    month = 1;
    do
    {
        balance = apply_interest(balance, rate);
        balance = apply_fee(balance, fee);
        if (month % 12 == 0)
            printf("year complete\n");
        report(month, balance, start);
        month = month + 1;
    } while (month <= months);
    printf("start %d\n", start);
    printf("final %d\n", balance);
    return 0;
}
